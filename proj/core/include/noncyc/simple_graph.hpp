#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noncyc/bitset.hpp"
#include "noncyc/finite_group.hpp"

namespace noncyc {

/// Undirected loop-free graph stored as a symmetric adjacency bit-matrix.
/// Vertices may carry the group element they represent and a display label.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertices);
  static SimpleGraph from_edges(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static SimpleGraph complete(std::size_t vertices);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  /// Ignores loops.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Vertex -> group element; empty when the graph is not attached to a group.
  const std::vector<Element>& elements() const { return elements_; }
  void set_elements(std::vector<Element> e) { elements_ = std::move(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

  /// Symmetric, loop-free.
  bool well_formed() const;

  bool operator==(const SimpleGraph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<Bitset> adj_;
  std::vector<Element> elements_;
  std::vector<std::string> labels_;
};

/// Graph distance: a finite hop count or infinity.
class Distance {
 public:
  static Distance finite(std::size_t d) { return Distance(d); }
  static Distance infinite() { return Distance(); }

  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  std::size_t value() const { return *value_; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  bool operator==(const Distance&) const = default;
  /// Infinity compares greater than every finite distance.
  bool operator<(const Distance& o) const {
    if (!value_) return false;
    if (!o.value_) return true;
    return *value_ < *o.value_;
  }

 private:
  Distance() = default;
  explicit Distance(std::size_t d) : value_(d) {}
  std::optional<std::size_t> value_;
};

}  // namespace noncyc
