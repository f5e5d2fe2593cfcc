#pragma once

#include <vector>

#include "tfg/graph.hpp"
#include "tfg/point.hpp"

namespace tfg {

/// A clopen subset of X_Sigma, held as the normalized antichain of its
/// maximal cylinders: no path is a prefix of another and no complete sibling
/// family {p.e : e out of t(p)} is present. The normal form is unique, so
/// set equality is vector equality. Paths are sorted in the global path order.
class ClopenSet {
 public:
  /// Prefix absorption plus sibling contraction, to a fixed point.
  static ClopenSet normalize(GraphRef graph, std::vector<Path> paths);
  static ClopenSet whole(GraphRef graph);
  static ClopenSet empty(GraphRef graph);
  static ClopenSet cylinder(GraphRef graph, Path p);

  const GraphRef& graph() const noexcept { return graph_; }
  const std::vector<Path>& paths() const noexcept { return paths_; }
  bool is_empty() const noexcept { return paths_.empty(); }
  bool is_whole() const;

  /// Throws MixedGraphs when the point's edges do not fit this graph.
  bool contains(const Point& x) const;
  /// Some path of the antichain is a prefix of p, i.e. C_p lies inside the set.
  bool covers(const Path& p) const;

  bool operator==(const ClopenSet& other) const { return same_graph(graph_, other.graph_) && paths_ == other.paths_; }

 private:
  ClopenSet(GraphRef graph, std::vector<Path> paths) : graph_(std::move(graph)), paths_(std::move(paths)) {}
  GraphRef graph_;
  std::vector<Path> paths_;
};

ClopenSet unite(const ClopenSet& a, const ClopenSet& b);
ClopenSet intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet complement(const ClopenSet& a);
ClopenSet difference(const ClopenSet& a, const ClopenSet& b);
bool equals(const ClopenSet& a, const ClopenSet& b);
bool is_subset(const ClopenSet& a, const ClopenSet& b);
bool disjoint(const ClopenSet& a, const ClopenSet& b);

}  // namespace tfg
