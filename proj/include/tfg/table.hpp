#pragma once

#include <cstddef>
#include <vector>

#include "tfg/clopen.hpp"
#include "tfg/graph.hpp"
#include "tfg/point.hpp"

namespace tfg {

/// The prefix replacement w.rest -> v.rest, i.e. S_v^{-1} S_w : C_w -> C_v.
struct PathPair {
  Path v;  // range side
  Path w;  // source side

  bool operator==(const PathPair&) const = default;
};

/// A finite table {(v_i, w_i)} representing the pseudogroup element
/// F = disjoint union of S_{v_i}^{-1} S_{w_i}. Validity (matching endpoints,
/// both families antichains) is checked on construction. A table is not
/// necessarily canonical; use canonicalize() or equals() for element identity.
class Table {
 public:
  /// Throws EndpointMismatch, DomainOverlap (the w's meet) or RangeOverlap (the v's meet).
  static Table from_pairs(GraphRef graph, std::vector<PathPair> pairs);
  static Table identity(GraphRef graph);
  static Table empty(GraphRef graph);
  /// Identity restricted to a clopen set.
  static Table idempotent(const ClopenSet& set);

  const GraphRef& graph() const noexcept { return graph_; }
  const std::vector<PathPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool is_empty() const noexcept { return pairs_.empty(); }

  bool operator==(const Table& other) const { return same_graph(graph_, other.graph_) && pairs_ == other.pairs_; }

 private:
  Table(GraphRef graph, std::vector<PathPair> pairs) : graph_(std::move(graph)), pairs_(std::move(pairs)) {}
  friend Table canonicalize(const Table&);
  friend Table simple_expand(const Table&, const std::vector<std::size_t>&);
  friend Table compose(const Table&, const Table&);
  friend Table inverse(const Table&);

  GraphRef graph_;
  std::vector<PathPair> pairs_;
};

/// from_pairs followed by canonicalize.
Table table_validate(GraphRef graph, std::vector<PathPair> pairs);
/// Contracts complete families {(v.e, w.e)} until none remain; sorts by (w, v).
Table canonicalize(const Table& t);
bool is_canonical(const Table& t);
/// Replaces each selected pair (v, w) by {(v.e, w.e) : e out of t(v)}. Throws IndexOutOfRange.
Table simple_expand(const Table& t, const std::vector<std::size_t>& indices);
/// left o right as partial maps (right acts first). Canonical result; may be empty.
Table compose(const Table& left, const Table& right);
Table inverse(const Table& t);
/// Throws NotDisjoint when sources or ranges meet.
Table union_disjoint(const Table& a, const Table& b);
ClopenSet source(const Table& t);
ClopenSet range(const Table& t);
bool is_full_group_element(const Table& t);
bool equals(const Table& a, const Table& b);
/// Throws NotInDomain.
Point apply(const Table& t, const Point& x);
/// Normalized union of C_w over canonical pairs with v != w.
ClopenSet support(const Table& t);

/// Germ of a table at a base point, held as the reduced pair: the acting pair
/// with all common trailing edges stripped. Reduced pairs are unique per germ.
struct Germ {
  Point base;
  Path v;
  Path w;

  bool operator==(const Germ&) const = default;
  auto operator<=>(const Germ& other) const {
    if (auto c = base <=> other.base; c != 0) return c;
    if (auto c = w <=> other.w; c != 0) return c;
    return v <=> other.v;
  }
};

/// Throws NotInDomain.
Germ germ_at(const Table& t, const Point& x);
/// Strips common trailing edges of (v, w).
PathPair reduce_pair(PathPair p);
/// Where the germ sends its base point.
Point germ_target(const DirectedGraph& g, const Germ& germ);

/// d pairwise disjoint cylinders C_{w_1}, ..., C_{w_d} with a common terminal vertex.
class Multisection {
 public:
  /// Throws InvalidMultisection.
  Multisection(GraphRef graph, std::vector<Path> components);

  std::size_t degree() const noexcept { return components_.size(); }
  const std::vector<Path>& components() const noexcept { return components_; }
  const GraphRef& graph() const noexcept { return graph_; }

 private:
  GraphRef graph_;
  std::vector<Path> components_;
};

/// The full-group element sending C_{w_i} onto C_{w_sigma(i)} by prefix
/// replacement and fixing the complement. `sigma` is a permutation of
/// {0, ..., d-1} in one-line notation. Throws InvalidMultisection.
Table multisection_element(const Multisection& m, const std::vector<std::size_t>& sigma);

}  // namespace tfg
