#include "tfg/sigma.hpp"

#include "tfg/error.hpp"

namespace tfg {

SigmaSystem SigmaSystem::validate(GraphRef source_graph, GraphRef target_graph, std::vector<Table> tables) {
  const DirectedGraph& src = *source_graph;
  if (tables.size() != src.edge_count())
    throw Error(ErrorCode::InvalidSystem, "expected one table per source edge (" + std::to_string(src.edge_count()) +
                                              "), got " + std::to_string(tables.size()));
  std::vector<ClopenSet> sources;
  for (EdgeId e = 0; e < tables.size(); ++e) {
    require_same_graph(tables[e].graph(), target_graph);
    if (tables[e].is_empty()) throw Error(ErrorCode::ZeroTable, "T_" + src.edge(e).id + " is the empty element");
    sources.push_back(source(tables[e]));
  }
  ClopenSet domain = ClopenSet::empty(target_graph);
  for (EdgeId e = 0; e < tables.size(); ++e) {
    if (!disjoint(domain, sources[e]))
      throw Error(ErrorCode::SourcesOverlap, "s(T_" + src.edge(e).id + ") meets an earlier source");
    domain = unite(domain, sources[e]);
  }
  // r(T_e) must be the union of the sources of the edges that can follow e.
  for (EdgeId e = 0; e < tables.size(); ++e) {
    ClopenSet expected = ClopenSet::empty(target_graph);
    for (EdgeId f : src.out_edges(src.edge(e).to)) expected = unite(expected, sources[f]);
    if (!equals(range(tables[e]), expected))
      throw Error(ErrorCode::RangeMismatch, "r(T_" + src.edge(e).id + ") differs from the union of the following sources");
  }
  return SigmaSystem(std::move(source_graph), std::move(target_graph), std::move(tables), std::move(sources),
                     std::move(domain));
}

SigmaSystem SigmaSystem::defining(GraphRef graph) {
  const DirectedGraph& g = *graph;
  std::vector<Table> tables;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    tables.push_back(table_validate(graph, {{empty_path(g.edge(e).to), make_path(g, {e})}}));
  return validate(graph, graph, std::move(tables));
}

Table path_transport(const SigmaSystem& sys, const Path& w) {
  const DirectedGraph& src = *sys.source_graph();
  if (w.origin >= src.vertex_count()) throw Error(ErrorCode::MixedGraphs, "path outside source graph");
  ClopenSet start = ClopenSet::empty(sys.target_graph());
  for (EdgeId f : src.out_edges(w.origin)) start = unite(start, sys.sources()[f]);
  Table out = Table::idempotent(start);
  for (EdgeId e : w.edges) {
    if (e >= src.edge_count()) throw Error(ErrorCode::MixedGraphs, "path outside source graph");
    out = compose(sys.table(e), out);
  }
  return out;
}

Table induced_hom(const SigmaSystem& sys, const Table& g, bool extend_by_identity) {
  require_same_graph(g.graph(), sys.source_graph());
  if (!is_full_group_element(g)) throw Error(ErrorCode::NotFullGroupElement, "input is not a full-group element");
  Table out = Table::empty(sys.target_graph());
  for (const auto& p : g.pairs()) {
    Table piece = compose(inverse(path_transport(sys, p.v)), path_transport(sys, p.w));
    out = union_disjoint(out, piece);
  }
  if (extend_by_identity) out = union_disjoint(out, Table::idempotent(complement(sys.domain())));
  return out;
}

ClopenSet coding_preimage(const SigmaSystem& sys, const Path& w) { return source(path_transport(sys, w)); }

namespace {

EdgeId edge_at(const SigmaSystem& sys, const Point& y) {
  for (EdgeId e = 0; e < sys.sources().size(); ++e)
    if (sys.sources()[e].contains(y)) return e;
  throw Error(ErrorCode::NotInDomain,
              "point " + to_string(*sys.target_graph(), y) + " is outside the domain of the system");
}

}  // namespace

Point system_step(const SigmaSystem& sys, const Point& y) { return apply(sys.table(edge_at(sys, y)), y); }

std::vector<EdgeId> coding_map(const SigmaSystem& sys, const Point& y, std::size_t n) {
  std::vector<EdgeId> out;
  out.reserve(n);
  Point cur = y;
  for (std::size_t i = 0; i < n; ++i) {
    EdgeId e = edge_at(sys, cur);
    out.push_back(e);
    if (i + 1 < n) cur = apply(sys.table(e), cur);
  }
  if (n == 0) edge_at(sys, y);
  return out;
}

}  // namespace tfg
