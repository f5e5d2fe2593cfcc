#include "tfg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "tfg/error.hpp"

namespace tfg {

DirectedGraph::DirectedGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error(ErrorCode::DuplicateId, "duplicate vertex id");
  vertex_names_ = std::move(vertices);

  std::vector<EdgeSpec> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].id == sorted[i - 1].id) throw Error(ErrorCode::DuplicateId, "duplicate edge id '" + sorted[i].id + "'");

  out_.resize(vertex_names_.size());
  for (const auto& spec : sorted) {
    auto from = find_vertex(spec.from);
    auto to = find_vertex(spec.to);
    if (!from || !to) throw Error(ErrorCode::DanglingEdge, "edge '" + spec.id + "' references an unknown vertex");
    out_[*from].push_back(static_cast<EdgeId>(edges_.size()));
    edges_.push_back(Edge{spec.id, *from, *to});
  }
}

std::optional<VertexId> DirectedGraph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<EdgeId> DirectedGraph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

IntegerMatrix DirectedGraph::adjacency() const {
  IntegerMatrix m(vertex_count(), vertex_count());
  for (const auto& e : edges_) m(e.from, e.to) += 1;
  return m;
}

bool DirectedGraph::operator==(const DirectedGraph& other) const {
  if (vertex_names_ != other.vertex_names_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.id != b.id || a.from != b.from || a.to != b.to) return false;
  }
  return true;
}

namespace {

std::vector<bool> reachable_from(const DirectedGraph& g, VertexId start) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexId> todo;
  seen[start] = true;
  todo.push(start);
  while (!todo.empty()) {
    VertexId x = todo.front();
    todo.pop();
    for (EdgeId e : g.out_edges(x)) {
      VertexId y = g.edge(e).to;
      if (!seen[y]) {
        seen[y] = true;
        todo.push(y);
      }
    }
  }
  return seen;
}

}  // namespace

GraphRef validate_graph(DirectedGraph graph) {
  if (graph.vertex_count() == 0) throw Error(ErrorCode::NotIrreducible, "graph has no vertices");
  for (VertexId x = 0; x < graph.vertex_count(); ++x) {
    auto seen = reachable_from(graph, x);
    // A path from x to x needs at least one edge, so x must reach itself through an out-edge.
    bool returns = false;
    for (EdgeId e : graph.out_edges(x)) returns = returns || reachable_from(graph, graph.edge(e).to)[x];
    if (!returns || std::find(seen.begin(), seen.end(), false) != seen.end())
      throw Error(ErrorCode::NotIrreducible, "no directed path from vertex '" + graph.vertex_name(x) + "' to some vertex");
  }
  bool branching = false;
  for (VertexId x = 0; x < graph.vertex_count(); ++x) branching = branching || graph.out_edges(x).size() >= 2;
  if (!branching) throw Error(ErrorCode::IsCycle, "every vertex has out-degree 1");
  return std::make_shared<const DirectedGraph>(std::move(graph));
}

bool same_graph(const GraphRef& a, const GraphRef& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_graph(const GraphRef& a, const GraphRef& b) {
  if (!same_graph(a, b)) throw Error(ErrorCode::MixedGraphs, "operands live on different graphs");
}

GraphRef full_shift_graph(unsigned n) {
  std::vector<EdgeSpec> edges;
  for (unsigned i = 0; i < n; ++i) edges.push_back({std::to_string(i), "*", "*"});
  return validate_graph(DirectedGraph({"*"}, edges));
}

GraphRef golden_mean_graph() {
  return validate_graph(DirectedGraph({"a", "b"}, {{"0", "a", "a"}, {"1", "a", "b"}, {"2", "b", "a"}}));
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = edges.size() <=> other.edges.size(); c != 0) return c;
  if (auto c = edges <=> other.edges; c != 0) return c;
  return origin <=> other.origin;
}

bool PrefixOrder::operator()(const Path& a, const Path& b) const {
  if (a.origin != b.origin) return a.origin < b.origin;
  return a.edges < b.edges;
}

Path empty_path(VertexId origin) { return Path{origin, {}}; }

Path make_path(const DirectedGraph& g, std::vector<EdgeId> edges, std::optional<VertexId> origin) {
  for (EdgeId e : edges)
    if (e >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
  if (edges.empty()) {
    if (!origin) {
      if (g.vertex_count() != 1) throw Error(ErrorCode::NonComposable, "empty path needs an explicit origin");
      origin = 0;
    }
    if (*origin >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "origin out of range");
    return Path{*origin, {}};
  }
  if (origin && *origin != g.edge(edges.front()).from)
    throw Error(ErrorCode::NonComposable, "declared origin differs from the first edge's origin");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (g.edge(edges[i - 1]).to != g.edge(edges[i]).from)
      throw Error(ErrorCode::NonComposable,
                  "edges '" + g.edge(edges[i - 1]).id + "' and '" + g.edge(edges[i]).id + "' are not composable");
  VertexId o = g.edge(edges.front()).from;
  return Path{o, std::move(edges)};
}

Path path_from_ids(const DirectedGraph& g, const std::vector<std::string>& ids, std::optional<std::string> origin) {
  std::vector<EdgeId> edges;
  edges.reserve(ids.size());
  for (const auto& id : ids) {
    auto e = g.find_edge(id);
    if (!e) throw Error(ErrorCode::UnknownEdge, "unknown edge id '" + id + "'");
    edges.push_back(*e);
  }
  std::optional<VertexId> o;
  if (origin) {
    o = g.find_vertex(*origin);
    if (!o) throw Error(ErrorCode::UnknownVertex, "unknown vertex id '" + *origin + "'");
  }
  return make_path(g, std::move(edges), o);
}

VertexId terminal(const DirectedGraph& g, const Path& p) {
  return p.edges.empty() ? p.origin : g.edge(p.edges.back()).to;
}

bool is_prefix(const Path& prefix, const Path& p) {
  if (prefix.origin != p.origin || prefix.edges.size() > p.edges.size()) return false;
  return std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

bool unrelated(const Path& a, const Path& b) { return !is_prefix(a, b) && !is_prefix(b, a); }

Path concat(const DirectedGraph& g, const Path& a, const Path& b) {
  if (terminal(g, a) != b.origin) throw Error(ErrorCode::NonComposable, "cannot concatenate paths");
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

Path extend(const Path& p, EdgeId e) {
  Path out = p;
  out.edges.push_back(e);
  return out;
}

Path drop_front(const DirectedGraph& g, const Path& p, std::size_t n) {
  if (n == 0) return p;
  if (n > p.size()) throw Error(ErrorCode::IndexOutOfRange, "drop_front past end of path");
  Path out{g.edge(p.edges[n - 1]).to, {p.edges.begin() + static_cast<std::ptrdiff_t>(n), p.edges.end()}};
  return out;
}

std::string to_string(const DirectedGraph& g, const Path& p) {
  if (p.empty()) return "e@" + g.vertex_name(p.origin);
  std::string out;
  bool single = true;
  for (EdgeId e : p.edges) single = single && g.edge(e).id.size() == 1;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i && !single) out += '.';
    out += g.edge(p.edges[i]).id;
  }
  return out;
}

}  // namespace tfg
