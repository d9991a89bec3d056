#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwn/errors.hpp"
#include "iwn/graph.hpp"
#include "iwn/maxflow.hpp"

namespace iwn {

/// Uniform grid over each edge interval: points l + k*(u-l)/(points-1).
/// Five points land exactly on L, Q1, Q2, Q3, U.
struct GridSpec {
  int points_per_edge = 5;
  std::uint64_t budget = 1'000'000;
};

struct SweepResult {
  std::uint64_t combination_count = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  std::vector<double> min_combination;  // one capacity per edge, in g.edges() order
  std::vector<double> max_combination;
  bool monotone = false;
};

namespace detail {

inline std::vector<std::vector<double>> edge_grids(const IWGraph& g, const GridSpec& spec) {
  if (spec.points_per_edge < 2) throw error("grid needs at least 2 points per edge");
  std::vector<std::vector<double>> grids;
  grids.reserve(g.edge_count());
  for (const auto& [key, w] : g.edges()) {
    std::vector<double> pts(spec.points_per_edge);
    for (int k = 0; k < spec.points_per_edge; ++k)
      pts[k] = w.lower() + k * (w.upper() - w.lower()) / (spec.points_per_edge - 1);
    grids.push_back(std::move(pts));
  }
  return grids;
}

inline std::uint64_t checked_combination_count(std::size_t edge_count, const GridSpec& spec) {
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < edge_count; ++e) {
    total *= static_cast<std::uint64_t>(spec.points_per_edge);
    if (total > spec.budget)
      throw budget_exceeded("combination count exceeds budget of " + std::to_string(spec.budget));
  }
  return total;
}

}  // namespace detail

/// Visits every grid combination in lexicographic order (last edge varies
/// fastest) and calls fn(indices, capacities, flow_value).
template <typename Fn>
void for_each_combination(const IWGraph& g, const std::string& source, const std::string& sink,
                          const GridSpec& spec, Fn&& fn) {
  if (source == sink) throw source_equals_sink("source equals sink: " + source);
  const auto grids = detail::edge_grids(g, spec);
  detail::checked_combination_count(g.edge_count(), spec);
  const std::size_t ne = g.edge_count();
  const std::size_t s = g.require(source);
  const std::size_t t = g.require(sink);

  std::vector<int> idx(ne, 0);
  std::vector<double> caps(ne);
  for (;;) {
    for (std::size_t e = 0; e < ne; ++e) caps[e] = grids[e][idx[e]];
    const ScalarFlowNetwork net(g, caps);
    fn(idx, caps, max_flow(net, s, t).value);
    // lexicographic odometer
    std::size_t e = ne;
    while (e > 0) {
      --e;
      if (++idx[e] < spec.points_per_edge) break;
      idx[e] = 0;
      if (e == 0) return;
    }
    if (ne == 0) return;
  }
}

/// Enumerates the full grid for one source/sink pair, recording the
/// extreme flows and checking coordinate-wise monotonicity against every
/// neighbour combination that is one grid step lower in one edge.
inline SweepResult lexicographic_sweep(const IWGraph& g, const std::string& source,
                                       const std::string& sink, const GridSpec& spec = {}) {
  SweepResult result;
  const std::size_t ne = g.edge_count();
  std::vector<double> flows;
  flows.reserve(static_cast<std::size_t>(detail::checked_combination_count(ne, spec)));

  bool first = true;
  for_each_combination(g, source, sink, spec,
                       [&](const std::vector<int>&, const std::vector<double>& caps, double value) {
                         flows.push_back(value);
                         if (first || value < result.min_value) {
                           result.min_value = value;
                           result.min_combination = caps;
                         }
                         // >= so a tie resolves to the lexicographically
                         // greatest maximizer (the all-upper combination)
                         if (first || value >= result.max_value) {
                           result.max_value = value;
                           result.max_combination = caps;
                         }
                         first = false;
                       });
  result.combination_count = flows.size();

  // Strides of the lexicographic index: last edge varies fastest.
  std::vector<std::uint64_t> stride(ne, 1);
  for (std::size_t e = ne; e-- > 1;)
    stride[e - 1] = stride[e] * static_cast<std::uint64_t>(spec.points_per_edge);

  result.monotone = true;
  std::vector<int> idx(ne, 0);
  for (std::uint64_t flat = 0; flat < flows.size() && result.monotone; ++flat) {
    for (std::size_t e = 0; e < ne; ++e) {
      if (idx[e] == 0) continue;
      if (flows[flat] < flows[flat - stride[e]] - FlowSolver::kTolerance) {
        result.monotone = false;
        break;
      }
    }
    std::size_t e = ne;
    while (e > 0) {
      --e;
      if (++idx[e] < spec.points_per_edge) break;
      idx[e] = 0;
    }
  }
  return result;
}

/// Confirms, for every vertex pair, that the brute-force sweep extremes
/// equal the max-flow values of the all-lower and all-upper networks.
inline bool verify_endpoint_decomposition(const IWGraph& g, const GridSpec& spec = {}) {
  const ScalarFlowNetwork lower(g, Bound::Lower);
  const ScalarFlowNetwork upper(g, Bound::Upper);
  const double tol = 1e-6;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
      const auto sweep = lexicographic_sweep(g, g.label(i), g.label(j), spec);
      if (!sweep.monotone) return false;
      if (std::abs(sweep.min_value - max_flow(lower, i, j).value) > tol) return false;
      if (std::abs(sweep.max_value - max_flow(upper, i, j).value) > tol) return false;
    }
  }
  return true;
}

}  // namespace iwn
