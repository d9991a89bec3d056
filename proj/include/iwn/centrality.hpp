#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwn/errors.hpp"
#include "iwn/graph.hpp"
#include "iwn/interval.hpp"
#include "iwn/maxflow.hpp"

namespace iwn {

enum class Measure { Degree, DegreeTuned, FlowBetweenness, FlowCloseness };

/// Per-vertex interval scores with competition ranks (tied scores share a
/// rank, the next distinct score skips by the group size; rank 1 is the
/// greatest interval under the midpoint/radius order).
struct CentralityReport {
  Measure measure = Measure::Degree;
  std::optional<double> alpha;
  std::map<std::string, Interval> scores;
  std::map<std::string, int> ranks;
  /// For flow betweenness: per-vertex total max-flow over the pairs where
  /// the vertex is neither source nor sink.
  std::optional<std::map<std::string, Interval>> aux;
};

/// Competition ranking ("1224") by descending interval order.
inline std::map<std::string, int> rank(const std::map<std::string, Interval>& scores) {
  std::vector<const std::pair<const std::string, Interval>*> items;
  items.reserve(scores.size());
  for (const auto& entry : scores) items.push_back(&entry);
  std::stable_sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
    const auto d = compare(a->second, b->second);
    if (d.relation != Relation::Equivalent) return d.relation == Relation::Greater;
    return a->first < b->first;  // stable display order inside a tie group
  });
  std::map<std::string, int> out;
  int current = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0 || compare(items[i]->second, items[i - 1]->second).relation != Relation::Equivalent)
      current = static_cast<int>(i) + 1;
    out[items[i]->first] = current;
  }
  return out;
}

/// Interval-weighted degree: the interval sum of incident edge weights.
inline CentralityReport iw_degree(const IWGraph& g) {
  CentralityReport report;
  report.measure = Measure::Degree;
  std::vector<Interval> strength(g.vertex_count(), Interval::point(0.0));
  for (const auto& [key, w] : g.edges()) {
    strength[key.first] += w;
    strength[key.second] += w;
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i) report.scores[g.label(i)] = strength[i];
  report.ranks = rank(report.scores);
  return report;
}

/// Degree with a tuning parameter: k^(1-alpha) * strength^alpha, blending
/// edge count (alpha=0) and strength (alpha=1).
inline CentralityReport iw_degree_tuned(const IWGraph& g, double alpha) {
  if (alpha < 0.0) throw negative_alpha("alpha must be >= 0");
  CentralityReport report;
  report.measure = Measure::DegreeTuned;
  report.alpha = alpha;
  std::vector<Interval> strength(g.vertex_count(), Interval::point(0.0));
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  for (const auto& [key, w] : g.edges()) {
    strength[key.first] += w;
    strength[key.second] += w;
    ++degree[key.first];
    ++degree[key.second];
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const double k = static_cast<double>(degree[i]);
    Interval score = Interval::point(0.0);
    if (k > 0.0) score = strength[i].pow(alpha).scaled(std::pow(k, 1.0 - alpha));
    report.scores[g.label(i)] = score;
    }
  report.ranks = rank(report.scores);
  return report;
}

/// Flow closeness: per vertex, the sum of pairwise max-flow values to all
/// other vertices, lower bounds from the all-lower network and upper
/// bounds from the all-upper network.
inline CentralityReport iw_flow_closeness(const IWGraph& g) {
  CentralityReport report;
  report.measure = Measure::FlowCloseness;
  const ScalarFlowNetwork lower(g, Bound::Lower);
  const ScalarFlowNetwork upper(g, Bound::Upper);
  const auto lo = all_pairs_max_flow(lower);
  const auto hi = all_pairs_max_flow(upper);
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    double sum_lo = 0.0, sum_hi = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      sum_lo += lo[i][j];
      sum_hi += hi[i][j];
    }
    report.scores[g.label(i)] = Interval(sum_lo, sum_hi);
  }
  report.ranks = rank(report.scores);
  return report;
}

/// Flow betweenness: per vertex i, the sum over unordered pairs {j,k}
/// avoiding i of the flow that depends on i, on each endpoint network.
/// aux(i) totals the pair max-flows themselves.
inline CentralityReport iw_flow_betweenness(const IWGraph& g) {
  CentralityReport report;
  report.measure = Measure::FlowBetweenness;
  const std::size_t n = g.vertex_count();
  const ScalarFlowNetwork nets[2] = {{g, Bound::Lower}, {g, Bound::Upper}};

  std::vector<double> dependency[2];
  std::vector<double> pair_total[2];
  for (int b = 0; b < 2; ++b) {
    dependency[b].assign(n, 0.0);
    pair_total[b].assign(n, 0.0);
    FlowSolver solver(nets[b]);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        solver.unmask_all();
        const double full = solver.max_flow(j, k).value;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == j || i == k) continue;
          pair_total[b][i] += full;
          solver.unmask_all();
          solver.mask_vertex(i);
          dependency[b][i] += full - solver.max_flow(j, k).value;
        }
      }
    }
  }
  std::map<std::string, Interval> aux;
  for (std::size_t i = 0; i < n; ++i) {
    report.scores[g.label(i)] = Interval(dependency[0][i], dependency[1][i]);
    aux[g.label(i)] = Interval(pair_total[0][i], pair_total[1][i]);
  }
  report.aux = std::move(aux);
  report.ranks = rank(report.scores);
  return report;
}

}  // namespace iwn
