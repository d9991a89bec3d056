#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "iwn/centrality.hpp"
#include "iwn/errors.hpp"
#include "iwn/graph.hpp"
#include "iwn/interval.hpp"

namespace iwn {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

inline std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

inline double parse_double(const std::string& s, std::size_t row) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw parse_error("row " + std::to_string(row) + ": not a number: '" + s + "'");
  }
}

}  // namespace detail

/// Reads an interval edge list (header `u,v,lower,upper`).
inline IWGraph read_edge_list_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("row 1: missing header");
  std::size_t row = 1;
  struct Row {
    std::string u, v;
    double lower, upper;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++row;
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (fields.size() != 4)
      throw parse_error("row " + std::to_string(row) + ": expected u,v,lower,upper");
    rows.push_back({detail::trim(fields[0]), detail::trim(fields[1]),
                    detail::parse_double(detail::trim(fields[2]), row),
                    detail::parse_double(detail::trim(fields[3]), row)});
  }
  IWGraph g;
  for (const auto& r : rows) {
    g.add_vertex(r.u);
    g.add_vertex(r.v);
  }
  row = 1;
  for (const auto& r : rows) {
    ++row;
    try {
      g.add_edge(r.u, r.v, Interval(r.lower, r.upper));
    } catch (const error& e) {
      throw parse_error("row " + std::to_string(row) + ": " + e.what());
    }
  }
  return g;
}

inline IWGraph read_edge_list_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return read_edge_list_csv(in);
}

/// Reads raw flow records (header `source,target,weight` or
/// `source,target,weight,period`).
inline std::vector<RawFlowRecord> read_raw_flow_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("row 1: missing header");
  const bool has_period = detail::split_csv_line(line).size() >= 4;
  std::vector<RawFlowRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (fields.size() != (has_period ? 4u : 3u))
      throw parse_error("row " + std::to_string(row) + ": wrong field count");
    RawFlowRecord r;
    r.source = detail::trim(fields[0]);
    r.target = detail::trim(fields[1]);
    r.weight = detail::parse_double(detail::trim(fields[2]), row);
    if (r.weight < 0.0) throw parse_error("row " + std::to_string(row) + ": negative weight");
    if (has_period) r.period = detail::trim(fields[3]);
    records.push_back(std::move(r));
  }
  return records;
}

inline std::vector<RawFlowRecord> read_raw_flow_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return read_raw_flow_csv(in);
}

/// Edge list CSV, edges sorted by (u,v) label order for byte-stable output.
inline void write_edge_list_csv(const IWGraph& g, std::ostream& out, int decimals = 2) {
  out << "u,v,lower,upper\n";
  for (const auto& [u, v, w] : g.sorted_edges()) {
    out << u << ',' << v << ',' << format_number(w.lower(), decimals) << ','
        << format_number(w.upper(), decimals) << '\n';
  }
}

/// Adjacency dump: vertices array plus (u,v,lower,upper) edge objects in
/// the same canonical order as the CSV form.
inline nlohmann::json graph_to_json(const IWGraph& g) {
  nlohmann::json j;
  std::vector<std::string> vertices = g.labels();
  std::sort(vertices.begin(), vertices.end());
  j["vertices"] = vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v, w] : g.sorted_edges()) {
    j["edges"].push_back({{"u", u}, {"v", v}, {"lower", w.lower()}, {"upper", w.upper()}});
  }
  return j;
}

/// Ranked table rows sorted by ascending rank then label.
inline std::vector<std::string> report_row_order(const CentralityReport& report) {
  std::vector<std::string> order;
  for (const auto& [vertex, score] : report.scores) order.push_back(vertex);
  std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    const int ra = report.ranks.at(a);
    const int rb = report.ranks.at(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  return order;
}

inline void write_report_csv(const CentralityReport& report, std::ostream& out, int decimals = 2) {
  out << "vertex,lower,upper,rank";
  if (report.measure == Measure::DegreeTuned || report.measure == Measure::Degree) out << ",alpha";
  if (report.aux) out << ",maxflow_all_pairs_lower,maxflow_all_pairs_upper";
  out << '\n';
  const double alpha = report.alpha.value_or(1.0);
  for (const auto& vertex : report_row_order(report)) {
    const Interval& s = report.scores.at(vertex);
    out << vertex << ',' << format_number(s.lower(), decimals) << ','
        << format_number(s.upper(), decimals) << ',' << report.ranks.at(vertex);
    if (report.measure == Measure::DegreeTuned || report.measure == Measure::Degree)
      out << ',' << format_number(alpha, decimals);
    if (report.aux) {
      const Interval& a = report.aux->at(vertex);
      out << ',' << format_number(a.lower(), decimals) << ',' << format_number(a.upper(), decimals);
    }
    out << '\n';
  }
}

inline nlohmann::json report_to_json(const CentralityReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& vertex : report_row_order(report)) {
    const Interval& s = report.scores.at(vertex);
    nlohmann::json row = {{"vertex", vertex},
                          {"lower", s.lower()},
                          {"upper", s.upper()},
                          {"rank", report.ranks.at(vertex)}};
    if (report.alpha) row["alpha"] = *report.alpha;
    if (report.aux) {
      const Interval& a = report.aux->at(vertex);
      row["maxflow_all_pairs_lower"] = a.lower();
      row["maxflow_all_pairs_upper"] = a.upper();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace iwn
