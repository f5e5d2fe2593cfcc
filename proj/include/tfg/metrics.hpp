#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tfg/graph.hpp"
#include "tfg/matrix.hpp"
#include "tfg/point.hpp"
#include "tfg/table.hpp"

namespace tfg {

/// Number of directed paths with n edges: the sum of the entries of M^n.
BigInt word_complexity(const GraphRef& graph, std::size_t n);
/// word_complexity for n = 1..max_n.
std::vector<BigInt> complexity_series(const GraphRef& graph, std::size_t max_n);

/// A generator move S_e (inverse = false) or S_e^{-1}.
struct BallEdge {
  std::size_t from;
  std::size_t to;
  EdgeId generator;
  bool inverse;

  bool operator==(const BallEdge&) const = default;
};

/// A ball in an orbital graph (Vertex = Point) or Cayley graph (Vertex = Germ).
/// Vertices are in BFS discovery order, which is deterministic: generators
/// are tried in edge-id order, S_e before S_e^{-1}. `edges` holds every S_e
/// move between ball vertices (the induced subgraph), each once, with
/// inverse = false; S_e^{-1} moves are the same edges read backwards.
template <class Vertex>
struct LabeledBall {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> depth;
  std::vector<BallEdge> edges;
  std::size_t radius = 0;

  std::size_t size() const noexcept { return vertices.size(); }
  /// Number of vertices within distance r of the root.
  std::size_t size_within(std::size_t r) const;
};

using OrbitalBall = LabeledBall<Point>;
using CayleyBall = LabeledBall<Germ>;

OrbitalBall orbital_ball(const GraphRef& graph, const Point& root, std::size_t radius);
CayleyBall cayley_ball(const GraphRef& graph, const Point& base, std::size_t radius);

/// Connected ball with |undirected deduplicated edges| = |vertices| - 1.
/// Self-loops and parallel edges count, so they make the answer false.
template <class Vertex>
bool is_tree(const LabeledBall<Vertex>& ball);

/// Per radius 0..max_radius, the maximum orbital-ball size over the samples:
/// a lower bound for the orbital growth. Samples are processed in parallel.
std::vector<std::size_t> growth_table(const GraphRef& graph, const std::vector<Point>& samples,
                                      std::size_t max_radius);
/// Serial reference for growth_table.
std::vector<std::size_t> growth_table_serial(const GraphRef& graph, const std::vector<Point>& samples,
                                             std::size_t max_radius);

std::string to_dot(const DirectedGraph& g, const OrbitalBall& ball);
std::string to_dot(const DirectedGraph& g, const CayleyBall& ball);

}  // namespace tfg
