#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "iwn/errors.hpp"
#include "iwn/graph.hpp"

namespace iwn {

/// One endpoint projection of an IWGraph: an undirected network with
/// scalar capacities, shared read-only across flow computations.
///
/// Each undirected edge acts as the pair of opposite arcs of the directed
/// expansion; net-flow accounting (skew symmetry) guarantees the two arcs
/// are never used simultaneously.
class ScalarFlowNetwork {
public:
  struct Edge {
    std::size_t u;
    std::size_t v;
    double capacity;
  };

  ScalarFlowNetwork(const IWGraph& g, Bound bound)
      : labels_(g.labels()), adjacency_(g.vertex_count()) {
    for (const auto& [key, w] : g.edges()) {
      add_edge(key.first, key.second, bound == Bound::Lower ? w.lower() : w.upper());
    }
  }

  /// Same topology as g with explicit per-edge capacities, given in the
  /// order of g.edges(); used by the grid sweep.
  ScalarFlowNetwork(const IWGraph& g, const std::vector<double>& capacities)
      : labels_(g.labels()), adjacency_(g.vertex_count()) {
    std::size_t k = 0;
    for (const auto& [key, w] : g.edges()) add_edge(key.first, key.second, capacities.at(k++));
  }

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t require(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw unknown_vertex("unknown vertex: " + label);
  }

private:
  friend class FlowSolver;

  void add_edge(std::size_t u, std::size_t v, double capacity) {
    adjacency_[u].push_back(edges_.size());
    adjacency_[v].push_back(edges_.size());
    edges_.push_back({u, v, capacity});
  }

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

struct MaxFlowResult {
  double value = 0.0;
  /// Net flow per edge, signed from edge.u to edge.v; f(v,u) = -f(u,v).
  std::vector<double> edge_flow;
  std::size_t source = 0;
  std::size_t sink = 0;
};

/// Ford-Fulkerson engine for undirected networks, with augmenting paths
/// chosen by breadth-first search (shortest first). Residual capacity is
/// c - f in the forward direction of an edge and c + f backward. A vertex
/// mask deletes a vertex by skipping its arcs, with no graph rebuild.
class FlowSolver {
public:
  /// Bottleneck below this is treated as exhausted; unreachable before
  /// exact optimality on integer capacities.
  static constexpr double kTolerance = 1e-9;

  explicit FlowSolver(const ScalarFlowNetwork& net)
      : net_(net), masked_(net.vertex_count(), false) {}

  void mask_vertex(std::size_t v) { masked_[v] = true; }
  void unmask_all() { std::fill(masked_.begin(), masked_.end(), false); }

  MaxFlowResult max_flow(std::size_t source, std::size_t sink) {
    if (source == sink) throw source_equals_sink("source equals sink: " + net_.labels()[source]);
    const std::size_t n = net_.vertex_count();
    if (source >= n || sink >= n) throw unknown_vertex("vertex index out of range");

    MaxFlowResult result;
    result.source = source;
    result.sink = sink;
    result.edge_flow.assign(net_.edges_.size(), 0.0);

    std::vector<std::size_t> parent_edge(n);
    std::vector<int> visited(n, 0);
    int stamp = 0;

    for (;;) {
      // Shortest augmenting path over positive-residual arcs.
      ++stamp;
      std::queue<std::size_t> frontier;
      visited[source] = stamp;
      frontier.push(source);
      bool reached = false;
      while (!frontier.empty() && !reached) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (const std::size_t e : net_.adjacency_[u]) {
          const std::size_t w = other_end(e, u);
          if (visited[w] == stamp || masked_[w]) continue;
          if (residual(result.edge_flow, e, u) <= kTolerance) continue;
          visited[w] = stamp;
          parent_edge[w] = e;
          if (w == sink) {
            reached = true;
            break;
          }
          frontier.push(w);
        }
      }
      if (!reached) break;

      double bottleneck = std::numeric_limits<double>::infinity();
      for (std::size_t v = sink; v != source;) {
        const std::size_t e = parent_edge[v];
        const std::size_t u = other_end(e, v);
        bottleneck = std::min(bottleneck, residual(result.edge_flow, e, u));
        v = u;
      }
      if (bottleneck <= kTolerance) break;

      for (std::size_t v = sink; v != source;) {
        const std::size_t e = parent_edge[v];
        const std::size_t u = other_end(e, v);
        if (net_.edges_[e].u == u)
          result.edge_flow[e] += bottleneck;
        else
          result.edge_flow[e] -= bottleneck;
        v = u;
      }
      result.value += bottleneck;
    }
    return result;
  }

private:
  std::size_t other_end(std::size_t e, std::size_t u) const {
    const auto& edge = net_.edges_[e];
    return edge.u == u ? edge.v : edge.u;
  }

  /// Residual capacity of edge e in the direction leaving u.
  double residual(const std::vector<double>& flow, std::size_t e, std::size_t u) const {
    const auto& edge = net_.edges_[e];
    return edge.u == u ? edge.capacity - flow[e] : edge.capacity + flow[e];
  }

  const ScalarFlowNetwork& net_;
  std::vector<bool> masked_;
};

inline MaxFlowResult max_flow(const ScalarFlowNetwork& net, std::size_t source, std::size_t sink) {
  FlowSolver solver(net);
  return solver.max_flow(source, sink);
}

inline MaxFlowResult max_flow(const ScalarFlowNetwork& net, const std::string& source,
                              const std::string& sink) {
  return max_flow(net, net.require(source), net.require(sink));
}

/// f_jk(i): the part of the j-k max flow that depends on intermediary i,
/// computed as flow(j,k) minus flow(j,k) with vertex i deleted.
inline double flow_dependency(const ScalarFlowNetwork& net, std::size_t source, std::size_t sink,
                              std::size_t intermediary) {
  if (source == sink || source == intermediary || sink == intermediary)
    throw vertices_not_distinct("flow_dependency requires pairwise distinct vertices");
  FlowSolver solver(net);
  const double full = solver.max_flow(source, sink).value;
  solver.mask_vertex(intermediary);
  const double without = solver.max_flow(source, sink).value;
  return full - without;
}

/// Symmetric matrix of pairwise max-flow values, zero diagonal.
inline std::vector<std::vector<double>> all_pairs_max_flow(const ScalarFlowNetwork& net) {
  const std::size_t n = net.vertex_count();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  FlowSolver solver(net);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = solver.max_flow(i, j).value;
      m[i][j] = v;
      m[j][i] = v;
    }
  }
  return m;
}

}  // namespace iwn
