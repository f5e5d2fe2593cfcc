#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfg/matrix.hpp"

namespace tfg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
};

/// Finite directed multigraph. Vertices and edges are re-indexed in
/// lexicographic order of their string ids, so index order is id order.
class DirectedGraph {
 public:
  struct Edge {
    std::string id;
    VertexId from;
    VertexId to;
  };

  /// Throws DuplicateId or DanglingEdge. Does not check irreducibility.
  DirectedGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view id) const;

  /// m_{xy} = number of edges x -> y.
  IntegerMatrix adjacency() const;

  bool operator==(const DirectedGraph& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
};

/// A graph that passed validate_graph: irreducible and not a single cycle.
/// Every algebraic object (clopen set, table, system) holds one of these.
using GraphRef = std::shared_ptr<const DirectedGraph>;

/// Throws NotIrreducible or IsCycle.
GraphRef validate_graph(DirectedGraph graph);

bool same_graph(const GraphRef& a, const GraphRef& b);
/// Throws MixedGraphs unless same_graph(a, b).
void require_same_graph(const GraphRef& a, const GraphRef& b);

/// Omega_n: one vertex "*" with loops "0", "1", ..., "n-1".
GraphRef full_shift_graph(unsigned n);
/// Vertices {a, b}; edges 0: a->a, 1: a->b, 2: b->a.
GraphRef golden_mean_graph();

/// A finite path. The origin is stored explicitly so that the empty path at a
/// vertex x is a genuine value; it names D_x, the paths starting at x.
struct Path {
  VertexId origin = 0;
  std::vector<EdgeId> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }

  bool operator==(const Path&) const = default;
  /// Global order: length first, then edge-id sequence, then origin.
  std::strong_ordering operator<=>(const Path& other) const;
};

/// Orders by (origin, edge sequence) so that prefixes sort before extensions.
struct PrefixOrder {
  bool operator()(const Path& a, const Path& b) const;
};

Path empty_path(VertexId origin);
/// Throws NonComposable or UnknownEdge.
Path make_path(const DirectedGraph& g, std::vector<EdgeId> edges, std::optional<VertexId> origin = {});
Path path_from_ids(const DirectedGraph& g, const std::vector<std::string>& ids,
                   std::optional<std::string> origin = {});
VertexId terminal(const DirectedGraph& g, const Path& p);
bool is_prefix(const Path& prefix, const Path& p);
/// Neither is a prefix of the other, so the cylinders are disjoint.
bool unrelated(const Path& a, const Path& b);
Path concat(const DirectedGraph& g, const Path& a, const Path& b);
Path extend(const Path& p, EdgeId e);
/// p without its first `n` edges; origin becomes the vertex reached after them.
Path drop_front(const DirectedGraph& g, const Path& p, std::size_t n);
std::string to_string(const DirectedGraph& g, const Path& p);

}  // namespace tfg
