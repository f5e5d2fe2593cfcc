#include "tfg/table.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tfg/error.hpp"

namespace tfg {

namespace {

bool pair_less(const PathPair& a, const PathPair& b) {
  if (auto c = a.w <=> b.w; c != 0) return c < 0;
  return a.v < b.v;
}

struct PairKeyOrder {
  bool operator()(const PathPair& a, const PathPair& b) const {
    PrefixOrder order;
    if (order(a.v, b.v)) return true;
    if (order(b.v, a.v)) return false;
    return order(a.w, b.w);
  }
};

void check_antichain(const std::vector<Path>& paths, ErrorCode code, const char* what) {
  std::vector<Path> sorted = paths;
  std::sort(sorted.begin(), sorted.end(), PrefixOrder{});
  // In prefix order, a prefix relation always shows up between neighbours.
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (is_prefix(sorted[i - 1], sorted[i])) throw Error(code, std::string(what) + " paths are not pairwise unrelated");
}

}  // namespace

Table Table::from_pairs(GraphRef graph, std::vector<PathPair> pairs) {
  const DirectedGraph& g = *graph;
  std::vector<Path> vs, ws;
  for (const auto& p : pairs) {
    for (const Path* q : {&p.v, &p.w}) {
      if (q->origin >= g.vertex_count()) throw Error(ErrorCode::MixedGraphs, "path origin outside graph");
      for (EdgeId e : q->edges)
        if (e >= g.edge_count()) throw Error(ErrorCode::MixedGraphs, "path edge outside graph");
    }
    if (terminal(g, p.v) != terminal(g, p.w))
      throw Error(ErrorCode::EndpointMismatch,
                  "pair (" + to_string(g, p.v) + ", " + to_string(g, p.w) + ") ends in different vertices");
    vs.push_back(p.v);
    ws.push_back(p.w);
  }
  check_antichain(ws, ErrorCode::DomainOverlap, "source");
  check_antichain(vs, ErrorCode::RangeOverlap, "range");
  return Table(std::move(graph), std::move(pairs));
}

Table Table::identity(GraphRef graph) { return idempotent(ClopenSet::whole(std::move(graph))); }

Table Table::empty(GraphRef graph) { return Table(std::move(graph), {}); }

Table Table::idempotent(const ClopenSet& set) {
  std::vector<PathPair> pairs;
  for (const auto& p : set.paths()) pairs.push_back({p, p});
  return canonicalize(Table(set.graph(), std::move(pairs)));
}

Table table_validate(GraphRef graph, std::vector<PathPair> pairs) {
  return canonicalize(Table::from_pairs(std::move(graph), std::move(pairs)));
}

Table canonicalize(const Table& t) {
  const DirectedGraph& g = *t.graph();
  std::vector<PathPair> pairs = t.pairs();
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<PathPair, std::vector<std::size_t>, PairKeyOrder> families;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& p = pairs[i];
      if (p.v.empty() || p.w.empty() || p.v.edges.back() != p.w.edges.back()) continue;
      PathPair parent = p;
      parent.v.edges.pop_back();
      parent.w.edges.pop_back();
      families[parent].push_back(i);
    }
    std::vector<bool> drop(pairs.size(), false);
    std::vector<PathPair> added;
    for (auto& [parent, members] : families) {
      if (members.size() != g.out_edges(terminal(g, parent.v)).size()) continue;
      for (std::size_t i : members) drop[i] = true;
      added.push_back(parent);
      changed = true;
    }
    if (!changed) break;
    std::vector<PathPair> next;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (!drop[i]) next.push_back(std::move(pairs[i]));
    next.insert(next.end(), added.begin(), added.end());
    pairs = std::move(next);
  }
  std::sort(pairs.begin(), pairs.end(), pair_less);
  return Table(t.graph(), std::move(pairs));
}

bool is_canonical(const Table& t) { return canonicalize(t).pairs() == t.pairs(); }

Table simple_expand(const Table& t, const std::vector<std::size_t>& indices) {
  const DirectedGraph& g = *t.graph();
  std::vector<bool> selected(t.size(), false);
  for (std::size_t i : indices) {
    if (i >= t.size()) throw Error(ErrorCode::IndexOutOfRange, "pair index " + std::to_string(i) + " out of range");
    selected[i] = true;
  }
  std::vector<PathPair> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& p = t.pairs()[i];
    if (!selected[i]) {
      out.push_back(p);
      continue;
    }
    for (EdgeId e : g.out_edges(terminal(g, p.v))) out.push_back({extend(p.v, e), extend(p.w, e)});
  }
  return Table(t.graph(), std::move(out));
}

Table compose(const Table& left, const Table& right) {
  require_same_graph(left.graph(), right.graph());
  const DirectedGraph& g = *left.graph();
  std::vector<PathPair> out;
  for (const auto& l : left.pairs())
    for (const auto& r : right.pairs()) {
      // right: r.w -> r.v, then left: l.w -> l.v
      if (is_prefix(r.v, l.w)) {
        // l.w = r.v . u  =>  r.w . u  ->  l.v
        Path u = drop_front(g, l.w, r.v.size());
        out.push_back({l.v, concat(g, r.w, u)});
      } else if (is_prefix(l.w, r.v)) {
        // r.v = l.w . u  =>  r.w  ->  l.v . u
        Path u = drop_front(g, r.v, l.w.size());
        out.push_back({concat(g, l.v, u), r.w});
      }
    }
  return canonicalize(Table(left.graph(), std::move(out)));
}

Table inverse(const Table& t) {
  std::vector<PathPair> out;
  out.reserve(t.size());
  for (const auto& p : t.pairs()) out.push_back({p.w, p.v});
  return canonicalize(Table(t.graph(), std::move(out)));
}

Table union_disjoint(const Table& a, const Table& b) {
  require_same_graph(a.graph(), b.graph());
  if (!disjoint(source(a), source(b))) throw Error(ErrorCode::NotDisjoint, "sources intersect");
  if (!disjoint(range(a), range(b))) throw Error(ErrorCode::NotDisjoint, "ranges intersect");
  std::vector<PathPair> all = a.pairs();
  all.insert(all.end(), b.pairs().begin(), b.pairs().end());
  return table_validate(a.graph(), std::move(all));
}

ClopenSet source(const Table& t) {
  std::vector<Path> ws;
  for (const auto& p : t.pairs()) ws.push_back(p.w);
  return ClopenSet::normalize(t.graph(), std::move(ws));
}

ClopenSet range(const Table& t) {
  std::vector<Path> vs;
  for (const auto& p : t.pairs()) vs.push_back(p.v);
  return ClopenSet::normalize(t.graph(), std::move(vs));
}

bool is_full_group_element(const Table& t) { return source(t).is_whole() && range(t).is_whole(); }

bool equals(const Table& a, const Table& b) {
  require_same_graph(a.graph(), b.graph());
  return canonicalize(a).pairs() == canonicalize(b).pairs();
}

namespace {

const PathPair& acting_pair(const Table& t, const Point& x) {
  for (const auto& p : t.pairs())
    if (x.starts_with(p.w)) return p;
  throw Error(ErrorCode::NotInDomain, "point " + to_string(*t.graph(), x) + " is outside the table's source");
}

}  // namespace

Point apply(const Table& t, const Point& x) {
  const DirectedGraph& g = *t.graph();
  const PathPair& p = acting_pair(t, x);
  return x.drop(g, p.w.size()).prepend(g, p.v);
}

ClopenSet support(const Table& t) {
  Table c = canonicalize(t);
  std::vector<Path> moved;
  for (const auto& p : c.pairs())
    if (p.v != p.w) moved.push_back(p.w);
  return ClopenSet::normalize(t.graph(), std::move(moved));
}

PathPair reduce_pair(PathPair p) {
  while (!p.v.empty() && !p.w.empty() && p.v.edges.back() == p.w.edges.back()) {
    p.v.edges.pop_back();
    p.w.edges.pop_back();
  }
  return p;
}

Germ germ_at(const Table& t, const Point& x) {
  PathPair p = reduce_pair(acting_pair(t, x));
  return Germ{x, std::move(p.v), std::move(p.w)};
}

Point germ_target(const DirectedGraph& g, const Germ& germ) {
  return germ.base.drop(g, germ.w.size()).prepend(g, germ.v);
}

Multisection::Multisection(GraphRef graph, std::vector<Path> components)
    : graph_(std::move(graph)), components_(std::move(components)) {
  const DirectedGraph& g = *graph_;
  if (components_.size() < 2) throw Error(ErrorCode::InvalidMultisection, "degree must be at least 2");
  for (const auto& c : components_) {
    if (c.origin >= g.vertex_count()) throw Error(ErrorCode::MixedGraphs, "component outside graph");
    for (EdgeId e : c.edges)
      if (e >= g.edge_count()) throw Error(ErrorCode::MixedGraphs, "component outside graph");
  }
  VertexId end = terminal(g, components_.front());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (terminal(g, components_[i]) != end)
      throw Error(ErrorCode::InvalidMultisection, "components do not share a terminal vertex");
    for (std::size_t j = i + 1; j < components_.size(); ++j)
      if (!unrelated(components_[i], components_[j]))
        throw Error(ErrorCode::InvalidMultisection, "components are not pairwise disjoint cylinders");
  }
}

Table multisection_element(const Multisection& m, const std::vector<std::size_t>& sigma) {
  const std::size_t d = m.degree();
  std::vector<std::size_t> check = sigma;
  std::sort(check.begin(), check.end());
  std::vector<std::size_t> ids(d);
  std::iota(ids.begin(), ids.end(), 0);
  if (check != ids) throw Error(ErrorCode::InvalidMultisection, "sigma is not a permutation of the components");

  std::vector<PathPair> pairs;
  for (std::size_t i = 0; i < d; ++i) pairs.push_back({m.components()[sigma[i]], m.components()[i]});
  ClopenSet rest = complement(ClopenSet::normalize(m.graph(), m.components()));
  for (const auto& p : rest.paths()) pairs.push_back({p, p});
  return table_validate(m.graph(), std::move(pairs));
}

}  // namespace tfg
