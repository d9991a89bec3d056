// Command-line front end: aggregation of raw flow records into an
// interval-weighted network, the interval centrality measures, and the
// brute-force grid sweep.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwn/centrality.hpp"
#include "iwn/errors.hpp"
#include "iwn/graph.hpp"
#include "iwn/io.hpp"
#include "iwn/sweep.hpp"

namespace {

constexpr int kExitParseError = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitBudgetExceeded = 3;

struct OutputTarget {
  std::ofstream file;
  std::ostream& stream() { return file.is_open() ? file : std::cout; }

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw iwn::error("cannot open output file " + path);
  }
};

void emit_report(const iwn::CentralityReport& report, const std::string& format,
                 const std::string& out_path, int decimals) {
  OutputTarget out;
  out.open(out_path);
  if (format == "json")
    out.stream() << iwn::report_to_json(report).dump(2) << '\n';
  else
    iwn::write_report_csv(report, out.stream(), decimals);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centrality measures for interval-weighted networks"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string format = "csv";
  int decimals = 2;
  double alpha = 1.0;
  double threshold = 0.0;
  std::string mode = "contemporary";
  std::string source;
  std::string sink;
  int grid_points = 5;
  std::uint64_t budget = 1'000'000;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input CSV file")->required();
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--decimals", decimals, "decimal places")->check(CLI::NonNegativeNumber);
  };

  CLI::App* aggregate = app.add_subcommand("aggregate", "build an IWN from raw directed flow records");
  add_common(aggregate);
  aggregate->add_option("--mode", mode, "contemporary|temporal")
      ->check(CLI::IsMember({"contemporary", "temporal"}));
  aggregate->add_option("--threshold", threshold, "keep records with weight > threshold")
      ->check(CLI::NonNegativeNumber);

  CLI::App* degree = app.add_subcommand("degree", "interval-weighted degree centrality");
  add_common(degree);
  degree->add_option("--alpha", alpha, "tuning parameter (default 1)")->check(CLI::NonNegativeNumber);

  CLI::App* closeness = app.add_subcommand("flow-closeness", "interval-weighted flow closeness");
  add_common(closeness);

  CLI::App* betweenness = app.add_subcommand("flow-betweenness", "interval-weighted flow betweenness");
  add_common(betweenness);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force grid sweep of scalar max-flows");
  add_common(oracle);
  oracle->add_option("--source", source, "source vertex")->required();
  oracle->add_option("--sink", sink, "sink vertex")->required();
  oracle->add_option("--grid-points", grid_points, "grid points per edge (default 5)");
  oracle->add_option("--budget", budget, "combination cap (default 1000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (*aggregate) {
      const auto records = iwn::read_raw_flow_csv(input);
      const iwn::IWGraph g = mode == "temporal" ? iwn::aggregate_temporal(records)
                                                : iwn::aggregate_contemporary(records, threshold);
      OutputTarget out;
      out.open(out_path);
      if (format == "json")
        out.stream() << iwn::graph_to_json(g).dump(2) << '\n';
      else
        iwn::write_edge_list_csv(g, out.stream(), decimals);
    } else if (*degree) {
      emit_report(iwn::iw_degree_tuned(iwn::read_edge_list_csv(input), alpha), format, out_path,
                  decimals);
    } else if (*closeness) {
      emit_report(iwn::iw_flow_closeness(iwn::read_edge_list_csv(input)), format, out_path, decimals);
    } else if (*betweenness) {
      emit_report(iwn::iw_flow_betweenness(iwn::read_edge_list_csv(input)), format, out_path,
                  decimals);
    } else if (*oracle) {
      const iwn::IWGraph g = iwn::read_edge_list_csv(input);
      iwn::GridSpec spec;
      spec.points_per_edge = grid_points;
      spec.budget = budget;
      OutputTarget out;
      out.open(out_path);
      auto& os = out.stream();
      for (const auto& [u, v, w] : g.sorted_edges()) os << u << '-' << v << ',';
      os << "max_flow\n";
      // g.sorted_edges() and g.edges() may order edges differently; the
      // sweep walks g.edges(), so map columns back to that order.
      std::vector<std::size_t> column;
      {
        const auto sorted = g.sorted_edges();
        for (const auto& [key, w] : g.edges()) {
          std::string a = g.label(key.first), b = g.label(key.second);
          if (b < a) std::swap(a, b);
          for (std::size_t c = 0; c < sorted.size(); ++c)
            if (std::get<0>(sorted[c]) == a && std::get<1>(sorted[c]) == b) column.push_back(c);
        }
      }
      iwn::for_each_combination(
          g, source, sink, spec,
          [&](const std::vector<int>&, const std::vector<double>& caps, double value) {
            std::vector<double> row(caps.size());
            for (std::size_t e = 0; e < caps.size(); ++e) row[column[e]] = caps[e];
            for (const double c : row) os << iwn::format_number(c, decimals) << ',';
            os << iwn::format_number(value, decimals) << '\n';
          });
    }
  } catch (const iwn::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudgetExceeded;
  } catch (const iwn::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const iwn::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return 0;
}
