// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "iwn/centrality.hpp"
#include "iwn/graph.hpp"
#include "iwn/interval.hpp"
#include "iwn/io.hpp"
#include "iwn/maxflow.hpp"
#include "iwn/sweep.hpp"
#include "test_helpers.hpp"

namespace {

using iwn::Bound;
using iwn::Interval;
using iwn::IWGraph;
using iwn::ScalarFlowNetwork;
using iwn::testing::brute_force_min_cut;
using iwn::testing::example_network;
using iwn::testing::random_connected_iwn;

int failures = 0;

struct Criterion {
  std::string name;
  double time_limit_seconds;
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "    failed: " << what << '\n';
    }
  }

  template <typename Fn>
  void run(Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      body(*this);
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(elapsed < time_limit_seconds,
           "runtime " + std::to_string(elapsed) + "s exceeds " +
               std::to_string(time_limit_seconds) + "s");
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << '\n' << detail.str();
    if (!ok) ++failures;
  }
};

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

// published values are rounded to 2 decimal places
bool matches_2dp(const Interval& got, double lo, double hi) {
  return near(std::round(got.lower() * 100) / 100, lo, 1e-9) &&
         near(std::round(got.upper() * 100) / 100, hi, 1e-9);
}

struct ExpectedRow {
  const char* vertex;
  double lo;
  double hi;
  int rank;
};

void check_report(Criterion& c, const iwn::CentralityReport& report, const std::string& label,
                  const std::vector<ExpectedRow>& rows) {
  for (const auto& row : rows) {
    const Interval& got = report.scores.at(row.vertex);
    c.expect(matches_2dp(got, row.lo, row.hi),
             label + " " + row.vertex + " score " + got.to_string() + " != [" +
                 iwn::format_number(row.lo) + "," + iwn::format_number(row.hi) + "]");
    c.expect(report.ranks.at(row.vertex) == row.rank,
             label + " " + row.vertex + " rank " + std::to_string(report.ranks.at(row.vertex)) +
                 " != " + std::to_string(row.rank));
  }
}

void criterion_1_degree_table(Criterion& c) {
  const IWGraph g = example_network();
  check_report(c, iwn::iw_degree_tuned(g, 0), "alpha=0",
               {{"v1", 2, 2, 2}, {"v2", 2, 2, 2}, {"v3", 3, 3, 1}, {"v4", 1, 1, 4}});
  check_report(c, iwn::iw_degree_tuned(g, 0.5), "alpha=0.5",
               {{"v1", 3.16, 3.74, 3}, {"v2", 3.46, 4.47, 2}, {"v3", 3.46, 4.90, 1},
                {"v4", 1.00, 1.73, 4}});
  check_report(c, iwn::iw_degree_tuned(g, 1), "alpha=1",
               {{"v1", 5, 7, 3}, {"v2", 6, 10, 1}, {"v3", 4, 8, 2}, {"v4", 1, 3, 4}});
  check_report(c, iwn::iw_degree_tuned(g, 1.5), "alpha=1.5",
               {{"v1", 7.91, 13.10, 2}, {"v2", 10.39, 22.36, 1}, {"v3", 4.62, 13.06, 3},
                {"v4", 1.00, 5.20, 4}});
}

void criterion_2_flow_table(Criterion& c) {
  const IWGraph g = example_network();

  const auto lo = iwn::all_pairs_max_flow(ScalarFlowNetwork(g, Bound::Lower));
  const auto hi = iwn::all_pairs_max_flow(ScalarFlowNetwork(g, Bound::Upper));
  const double expected_lo[4][4] = {
      {0, 5, 3, 1}, {5, 0, 3, 1}, {3, 3, 0, 1}, {1, 1, 1, 0}};
  const double expected_hi[4][4] = {
      {0, 7, 5, 3}, {7, 0, 5, 3}, {5, 5, 0, 3}, {3, 3, 3, 0}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      c.expect(near(lo[i][j], expected_lo[i][j]) && near(hi[i][j], expected_hi[i][j]),
               "pairwise max-flow (" + g.label(i) + "," + g.label(j) + ") = [" +
                   iwn::format_number(lo[i][j]) + "," + iwn::format_number(hi[i][j]) + "]");
    }
  }

  const auto fb = iwn::iw_flow_betweenness(g);
  check_report(c, fb, "IWFB",
               {{"v1", 1, 1, 3}, {"v2", 2, 6, 2}, {"v3", 3, 7, 1}, {"v4", 0, 0, 4}});
  const std::map<std::string, Interval> expected_aux = {{"v1", {5, 11}},
                                                        {"v2", {5, 11}},
                                                        {"v3", {7, 13}},
                                                        {"v4", {11, 17}}};
  const std::map<std::string, int> expected_aux_rank = {
      {"v1", 3}, {"v2", 3}, {"v3", 2}, {"v4", 1}};
  for (const auto& [vertex, expected] : expected_aux) {
    c.expect(fb.aux->at(vertex) == expected,
             "aux " + vertex + " = " + fb.aux->at(vertex).to_string());
  }
  c.expect(iwn::rank(*fb.aux) == expected_aux_rank, "max-flow (all pairs) rank column");

  check_report(c, iwn::iw_flow_closeness(g), "IWFC",
               {{"v1", 9, 15, 1}, {"v2", 9, 15, 1}, {"v3", 7, 13, 3}, {"v4", 3, 9, 4}});
}

void criterion_3_order_table(Criterion& c) {
  struct Scenario {
    const char* name;
    Interval x, y;
    double dist;
    Interval expected_inf, expected_sup;
    double mx, rx, my, ry;
  };
  const Scenario scenarios[] = {
      {"non-overlapping", {1, 3}, {4, 6}, 3, {1, 3}, {4, 6}, 2, 1, 5, 1},
      {"partially overlapping", {1, 4}, {3, 6}, 2, {1, 4}, {3, 6}, 2.5, 1.5, 4.5, 1.5},
      {"completely overlapping", {2, 5}, {1, 6}, 1, {1, 5}, {2, 6}, 3.5, 1.5, 3.5, 2.5},
  };
  for (const auto& s : scenarios) {
    c.expect(iwn::compare(s.x, s.y).relation == iwn::Relation::Less,
             std::string(s.name) + ": Y must be the greater interval");
    c.expect(near(iwn::hausdorff(s.x, s.y), s.dist), std::string(s.name) + ": Hausdorff distance");
    c.expect(iwn::inf(s.x, s.y) == s.expected_inf, std::string(s.name) + ": inf");
    c.expect(iwn::sup(s.x, s.y) == s.expected_sup, std::string(s.name) + ": sup");
    c.expect(near(s.x.midpoint(), s.mx) && near(s.x.radius(), s.rx) &&
                 near(s.y.midpoint(), s.my) && near(s.y.radius(), s.ry),
             std::string(s.name) + ": midpoint/radius row");
  }
  c.expect(iwn::compare(Interval(2, 5), Interval(1, 6)).tie_broken_by_radius,
           "equal midpoints decided by radius");
}

void criterion_4_lexicographic_sweep(Criterion& c) {
  const IWGraph g = iwn::build_graph(
      {"v1", "v2", "v3"},
      {{"v1", "v2", {2, 8}}, {"v1", "v3", {1, 5}}, {"v2", "v3", {0, 10}}});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto sweep = iwn::lexicographic_sweep(g, g.label(i), g.label(j), iwn::GridSpec{5});
      const std::string pair = "(" + g.label(i) + "," + g.label(j) + ")";
      c.expect(sweep.combination_count == 125, pair + ": 125 combinations");
      c.expect(sweep.monotone, pair + ": coordinate-wise monotone");
      c.expect(sweep.min_combination == std::vector<double>({2, 1, 0}),
               pair + ": min attained at (2,1,0)");
      c.expect(sweep.max_combination == std::vector<double>({8, 5, 10}),
               pair + ": max attained at (8,5,10)");
    }
  }
}

void criterion_5_oracle_equivalence(Criterion& c) {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> size(4, 6);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const IWGraph g = random_connected_iwn(rng, size(rng), 10);
    if (!iwn::verify_endpoint_decomposition(g, iwn::GridSpec{3})) {
      c.expect(false, "endpoint decomposition violated on trial " + std::to_string(trial));
      return;
    }
    ++checked;
  }
  c.expect(checked == 100, "100 random networks verified");
}

void criterion_6_maxflow_equals_mincut(Criterion& c) {
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> size(2, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const IWGraph g = random_connected_iwn(rng, size(rng), 10);
    const ScalarFlowNetwork net(g, trial % 2 ? Bound::Upper : Bound::Lower);
    std::uniform_int_distribution<std::size_t> pick(0, net.vertex_count() - 1);
    std::size_t s = pick(rng), t = pick(rng);
    while (t == s) t = pick(rng);
    const double flow = iwn::max_flow(net, s, t).value;
    const double cut = brute_force_min_cut(net, s, t);
    if (!near(flow, cut, 1e-9)) {
      c.expect(false, "trial " + std::to_string(trial) + ": flow " + std::to_string(flow) +
                          " != min cut " + std::to_string(cut));
      return;
    }
  }
}

void criterion_7_degenerate_consistency(Criterion& c) {
  std::mt19937 rng(107);
  std::uniform_int_distribution<int> size(3, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const IWGraph base = random_connected_iwn(rng, size(rng), 9);
    IWGraph g(base.labels());
    for (const auto& [key, w] : base.edges())
      g.add_edge(base.label(key.first), base.label(key.second), Interval::point(w.upper()));

    const ScalarFlowNetwork net(g, Bound::Lower);
    const auto pairwise = iwn::all_pairs_max_flow(net);
    const auto degree = iwn::iw_degree(g);
    const auto closeness = iwn::iw_flow_closeness(g);
    const auto betweenness = iwn::iw_flow_betweenness(g);
    const std::size_t n = g.vertex_count();
    bool all_ok = true;
    for (std::size_t i = 0; i < n && all_ok; ++i) {
      double strength = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (auto w = g.weight(i, j)) strength += w->lower();
      double fc = 0.0;
      for (std::size_t j = 0; j < n; ++j) fc += pairwise[i][j];
      double fb = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          if (i == j || i == k) continue;
          fb += iwn::flow_dependency(net, j, k, i);
        }
      const std::string& v = g.label(i);
      all_ok = degree.scores.at(v) == Interval::point(strength) &&
               closeness.scores.at(v).degenerate() &&
               near(closeness.scores.at(v).lower(), fc) &&
               betweenness.scores.at(v).degenerate() &&
               near(betweenness.scores.at(v).lower(), fb, 1e-7);
    }
    if (!all_ok) {
      c.expect(false, "degenerate trial " + std::to_string(trial) +
                          " diverged from the scalar measures");
      return;
    }
  }
}

void criterion_8_aggregation_properties(Criterion& c) {
  std::mt19937 rng(109);
  // integer-valued weights so the CSV round trip is lossless
  std::uniform_int_distribution<int> weight(0, 200);
  std::uniform_int_distribution<int> vertex(0, 11);
  std::vector<iwn::RawFlowRecord> records;
  for (int i = 0; i < 1000; ++i) {
    records.push_back({"r" + std::to_string(vertex(rng)), "r" + std::to_string(vertex(rng)),
                       static_cast<double>(weight(rng))});
  }
  const double threshold = 60;
  const IWGraph base = iwn::aggregate_contemporary(records, threshold);

  // direction symmetry
  auto flipped = records;
  for (auto& r : flipped) std::swap(r.source, r.target);
  c.expect(iwn::aggregate_contemporary(flipped, threshold) == base, "direction symmetry");

  // reorder invariance
  auto shuffled = records;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  c.expect(iwn::aggregate_contemporary(shuffled, threshold) == base, "reorder invariance");

  // threshold semantics: strict >, survivors' min/max per pair
  bool threshold_ok = true;
  for (const auto& [u, v, w] : base.sorted_edges()) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& r : records) {
      const bool same = (r.source == u && r.target == v) || (r.source == v && r.target == u);
      if (!same || r.weight <= threshold) continue;
      lo = std::min(lo, r.weight);
      hi = std::max(hi, r.weight);
    }
    threshold_ok = threshold_ok && w.lower() == lo && w.upper() == hi && lo > threshold;
  }
  c.expect(threshold_ok, "threshold semantics (keep weight > threshold)");

  // round trip byte stability
  std::ostringstream first;
  iwn::write_edge_list_csv(base, first, 6);
  std::istringstream back(first.str());
  const IWGraph reread = iwn::read_edge_list_csv(back);
  std::ostringstream second;
  iwn::write_edge_list_csv(reread, second, 6);
  c.expect(first.str() == second.str() && reread == base, "round-trip byte stability");
}

}  // namespace

int main() {
  Criterion{"1. degree table reproduction (alpha in {0, 0.5, 1, 1.5})", 1.0}.run(
      criterion_1_degree_table);
  Criterion{"2. flow table reproduction (pairwise max-flows, IWFB, IWFC, ranks)", 1.0}.run(
      criterion_2_flow_table);
  Criterion{"3. interval ordering scenarios (d_H, inf, sup, midpoint/radius)", 1.0}.run(
      criterion_3_order_table);
  Criterion{"4. lexicographic sweep of the triangle (125 combinations, monotone)", 5.0}.run(
      criterion_4_lexicographic_sweep);
  Criterion{"5. oracle equivalence on 100 random connected networks", 120.0}.run(
      criterion_5_oracle_equivalence);
  Criterion{"6. max-flow equals exhaustive min-cut on 200 random networks", 60.0}.run(
      criterion_6_maxflow_equals_mincut);
  Criterion{"7. degenerate networks reproduce the classical measures", 60.0}.run(
      criterion_7_degenerate_consistency);
  Criterion{"8. aggregation pipeline properties and round-trip stability", 60.0}.run(
      criterion_8_aggregation_properties);

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
