#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iwn/errors.hpp"
#include "iwn/interval.hpp"

namespace iwn {

/// One directed observation prior to aggregation (e.g. a commuter count
/// from one region to another, optionally tagged with a period).
struct RawFlowRecord {
  std::string source;
  std::string target;
  double weight = 0.0;
  std::optional<std::string> period;
};

enum class Bound { Lower, Upper };

/// Undirected simple graph with an Interval capacity on every edge.
///
/// No self-loops; every stored weight satisfies 0 <= lower <= upper with
/// upper > 0. A fully-zero interval means "no edge" and is stored as
/// absence. Immutable once built; safe to share across flow computations.
class IWGraph {
public:
  IWGraph() = default;

  explicit IWGraph(const std::vector<std::string>& vertex_labels) {
    for (const auto& label : vertex_labels) add_vertex(label);
  }

  /// Adds a vertex if not already present; returns its index.
  std::size_t add_vertex(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    const std::size_t id = labels_.size();
    labels_.push_back(label);
    index_.emplace(label, id);
    return id;
  }

  void add_edge(const std::string& u, const std::string& v, const Interval& w) {
    const std::size_t iu = require(u);
    const std::size_t iv = require(v);
    if (iu == iv) throw invalid_interval("self-loop on vertex " + u);
    if (w.lower() < 0.0 || w.upper() <= 0.0) {
      throw invalid_interval("edge {" + u + "," + v + "} needs 0 <= lower <= upper, upper > 0, got " +
                             w.to_string());
    }
    const auto key = ordered(iu, iv);
    if (edges_.count(key)) throw duplicate_edge("duplicate edge {" + u + "," + v + "}");
    edges_.emplace(key, w);
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  bool has_vertex(const std::string& label) const { return index_.count(label) != 0; }

  std::size_t require(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw unknown_vertex("unknown vertex: " + label);
    return it->second;
  }

  std::optional<Interval> weight(std::size_t u, std::size_t v) const {
    auto it = edges_.find(ordered(u, v));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Interval> weight(const std::string& u, const std::string& v) const {
    return weight(require(u), require(v));
  }

  /// Edges keyed by normalized index pair (smaller index first).
  const std::map<std::pair<std::size_t, std::size_t>, Interval>& edges() const { return edges_; }

  /// Edges as (u, v, weight) with u < v by label, sorted by (u, v); the
  /// canonical order for serialized output.
  std::vector<std::tuple<std::string, std::string, Interval>> sorted_edges() const {
    std::vector<std::tuple<std::string, std::string, Interval>> out;
    out.reserve(edges_.size());
    for (const auto& [key, w] : edges_) {
      std::string a = labels_[key.first];
      std::string b = labels_[key.second];
      if (b < a) std::swap(a, b);
      out.emplace_back(std::move(a), std::move(b), w);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });
    return out;
  }

  bool operator==(const IWGraph& other) const {
    if (labels_ != other.labels_) return false;
    return edges_ == other.edges_;
  }

private:
  static std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, Interval> edges_;
};

/// An edge-list entry for build_graph.
struct IntervalEdge {
  std::string u;
  std::string v;
  Interval weight;
};

/// Builds an IWGraph from an explicit vertex set and edge list. Edges may
/// only reference listed vertices; duplicates are rejected.
inline IWGraph build_graph(const std::vector<std::string>& vertex_labels,
                           const std::vector<IntervalEdge>& interval_edges) {
  IWGraph g(vertex_labels);
  for (const auto& e : interval_edges) g.add_edge(e.u, e.v, e.weight);
  return g;
}

/// One scalar arc of the undirected->directed expansion.
struct Arc {
  std::string from;
  std::string to;
  double capacity = 0.0;
};

/// Every undirected edge expanded into two opposite arcs of equal capacity.
struct DirectedExpansion {
  std::vector<Arc> arcs;
};

inline DirectedExpansion expand_directed(const IWGraph& g, Bound bound) {
  DirectedExpansion out;
  out.arcs.reserve(2 * g.edge_count());
  for (const auto& [key, w] : g.edges()) {
    const double c = bound == Bound::Lower ? w.lower() : w.upper();
    out.arcs.push_back({g.label(key.first), g.label(key.second), c});
    out.arcs.push_back({g.label(key.second), g.label(key.first), c});
  }
  return out;
}

namespace detail {

struct PairExtrema {
  double min_w;
  double max_w;
};

inline std::map<std::pair<std::string, std::string>, PairExtrema> scan_pairs(
    const std::vector<const RawFlowRecord*>& records) {
  std::map<std::pair<std::string, std::string>, PairExtrema> acc;
  for (const RawFlowRecord* r : records) {
    auto key = r->source < r->target ? std::make_pair(r->source, r->target)
                                     : std::make_pair(r->target, r->source);
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(key, PairExtrema{r->weight, r->weight});
    } else {
      it->second.min_w = std::min(it->second.min_w, r->weight);
      it->second.max_w = std::max(it->second.max_w, r->weight);
    }
  }
  return acc;
}

inline IWGraph graph_from_pairs(
    const std::map<std::pair<std::string, std::string>, PairExtrema>& pairs,
    const std::vector<std::string>& extra_labels) {
  IWGraph g;
  for (const auto& label : extra_labels) g.add_vertex(label);
  std::vector<std::string> vertices;
  for (const auto& [key, ext] : pairs) {
    vertices.push_back(key.first);
    vertices.push_back(key.second);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [key, ext] : pairs) {
    if (ext.max_w <= 0.0) continue;  // a zero interval encodes edge absence
    g.add_edge(key.first, key.second, Interval(ext.min_w, ext.max_w));
  }
  return g;
}

}  // namespace detail

/// Contemporary aggregation: drop records with weight <= threshold, then
/// for each unordered vertex pair take [min, max] over the surviving
/// weights in both directions. Self-loop records are ignored.
inline IWGraph aggregate_contemporary(const std::vector<RawFlowRecord>& records,
                                      double threshold = 0.0,
                                      const std::vector<std::string>& extra_labels = {}) {
  std::vector<const RawFlowRecord*> surviving;
  for (const auto& r : records) {
    if (r.weight < 0.0) throw parse_error("negative weight on record " + r.source + "->" + r.target);
    if (r.source == r.target) continue;
    if (r.weight > threshold) surviving.push_back(&r);
  }
  return detail::graph_from_pairs(detail::scan_pairs(surviving), extra_labels);
}

/// Temporal aggregation: [min, max] per unordered pair over all periods
/// and both directions. Every record must carry a period label.
inline IWGraph aggregate_temporal(const std::vector<RawFlowRecord>& records,
                                  const std::vector<std::string>& extra_labels = {}) {
  std::vector<const RawFlowRecord*> surviving;
  for (const auto& r : records) {
    if (!r.period) throw missing_period("record " + r.source + "->" + r.target + " lacks a period label");
    if (r.weight < 0.0) throw parse_error("negative weight on record " + r.source + "->" + r.target);
    if (r.source == r.target) continue;
    surviving.push_back(&r);
  }
  return detail::graph_from_pairs(detail::scan_pairs(surviving), extra_labels);
}

}  // namespace iwn
