#include "tfg/clopen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tfg/error.hpp"

namespace tfg {

namespace {

void check_paths(const DirectedGraph& g, const std::vector<Path>& paths) {
  for (const auto& p : paths) {
    if (p.origin >= g.vertex_count()) throw Error(ErrorCode::MixedGraphs, "path origin outside graph");
    for (EdgeId e : p.edges)
      if (e >= g.edge_count()) throw Error(ErrorCode::MixedGraphs, "path edge outside graph");
  }
}

// Drop every path that has a proper or equal prefix earlier in prefix order.
std::vector<Path> absorb_prefixes(std::vector<Path> paths) {
  std::sort(paths.begin(), paths.end(), PrefixOrder{});
  std::vector<Path> kept;
  for (auto& p : paths) {
    if (!kept.empty() && is_prefix(kept.back(), p)) continue;
    kept.push_back(std::move(p));
  }
  return kept;
}

}  // namespace

ClopenSet ClopenSet::normalize(GraphRef graph, std::vector<Path> paths) {
  const DirectedGraph& g = *graph;
  check_paths(g, paths);
  std::set<Path, PrefixOrder> current;
  for (auto& p : absorb_prefixes(std::move(paths))) current.insert(std::move(p));

  // Contract complete sibling families, deepest first, until none remain.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Path, std::size_t, PrefixOrder> children;
    for (const auto& p : current)
      if (!p.empty()) {
        Path parent = p;
        parent.edges.pop_back();
        ++children[parent];
      }
    for (const auto& [parent, count] : children) {
      if (count != g.out_edges(terminal(g, parent)).size()) continue;
      for (EdgeId e : g.out_edges(terminal(g, parent))) current.erase(extend(parent, e));
      current.insert(parent);
      changed = true;
    }
  }
  std::vector<Path> out(current.begin(), current.end());
  std::sort(out.begin(), out.end());
  return ClopenSet(std::move(graph), std::move(out));
}

ClopenSet ClopenSet::whole(GraphRef graph) {
  std::vector<Path> roots;
  for (VertexId x = 0; x < graph->vertex_count(); ++x) roots.push_back(empty_path(x));
  return ClopenSet(std::move(graph), std::move(roots));
}

ClopenSet ClopenSet::empty(GraphRef graph) { return ClopenSet(std::move(graph), {}); }

ClopenSet ClopenSet::cylinder(GraphRef graph, Path p) {
  std::vector<Path> one;
  one.push_back(std::move(p));
  return normalize(std::move(graph), std::move(one));
}

bool ClopenSet::is_whole() const {
  if (paths_.size() != graph_->vertex_count()) return false;
  return std::all_of(paths_.begin(), paths_.end(), [](const Path& p) { return p.empty(); });
}

bool ClopenSet::contains(const Point& x) const {
  if (x.origin() >= graph_->vertex_count()) throw Error(ErrorCode::MixedGraphs, "point origin outside graph");
  for (std::size_t i = 0; i < x.prefix().size(); ++i)
    if (x.prefix().edges[i] >= graph_->edge_count()) throw Error(ErrorCode::MixedGraphs, "point edge outside graph");
  for (EdgeId e : x.cycle().edges)
    if (e >= graph_->edge_count()) throw Error(ErrorCode::MixedGraphs, "point edge outside graph");
  return std::any_of(paths_.begin(), paths_.end(), [&](const Path& p) { return x.starts_with(p); });
}

bool ClopenSet::covers(const Path& p) const {
  return std::any_of(paths_.begin(), paths_.end(), [&](const Path& q) { return is_prefix(q, p); });
}

ClopenSet unite(const ClopenSet& a, const ClopenSet& b) {
  require_same_graph(a.graph(), b.graph());
  std::vector<Path> all = a.paths();
  all.insert(all.end(), b.paths().begin(), b.paths().end());
  return ClopenSet::normalize(a.graph(), std::move(all));
}

ClopenSet intersect(const ClopenSet& a, const ClopenSet& b) {
  require_same_graph(a.graph(), b.graph());
  std::vector<Path> out;
  for (const auto& p : a.paths())
    for (const auto& q : b.paths()) {
      if (is_prefix(p, q))
        out.push_back(q);
      else if (is_prefix(q, p))
        out.push_back(p);
    }
  return ClopenSet::normalize(a.graph(), std::move(out));
}

namespace {

void complement_under(const DirectedGraph& g, const Path& p, const std::vector<Path>& set, std::vector<Path>& out) {
  bool extended = false;
  for (const auto& q : set) {
    if (is_prefix(q, p)) return;
    extended = extended || is_prefix(p, q);
  }
  if (!extended) {
    out.push_back(p);
    return;
  }
  for (EdgeId e : g.out_edges(terminal(g, p))) complement_under(g, extend(p, e), set, out);
}

}  // namespace

ClopenSet complement(const ClopenSet& a) {
  std::vector<Path> out;
  for (VertexId x = 0; x < a.graph()->vertex_count(); ++x) complement_under(*a.graph(), empty_path(x), a.paths(), out);
  return ClopenSet::normalize(a.graph(), std::move(out));
}

ClopenSet difference(const ClopenSet& a, const ClopenSet& b) { return intersect(a, complement(b)); }

bool equals(const ClopenSet& a, const ClopenSet& b) {
  require_same_graph(a.graph(), b.graph());
  return a.paths() == b.paths();
}

bool is_subset(const ClopenSet& a, const ClopenSet& b) { return equals(intersect(a, b), a); }

bool disjoint(const ClopenSet& a, const ClopenSet& b) { return intersect(a, b).is_empty(); }

}  // namespace tfg
