#pragma once

#include <cstdint>
#include <random>

#include "tfg/cocycle.hpp"
#include "tfg/graph.hpp"
#include "tfg/point.hpp"
#include "tfg/table.hpp"

namespace tfg {

using Rng = std::mt19937_64;

/// A random walk of exactly `length` edges from a uniformly chosen vertex
/// (or from `origin` when given).
Path random_path(const DirectedGraph& g, Rng& rng, std::size_t length, std::optional<VertexId> origin = {});

/// prefix (up to max_prefix edges) . cycle (a closed walk of length >= 1).
Point random_point(const DirectedGraph& g, Rng& rng, std::size_t max_prefix = 4, std::size_t max_cycle = 4);

/// A random path pair (v, w) with terminal(v) = terminal(w), lengths <= max_len.
PathPair random_pair(const DirectedGraph& g, Rng& rng, std::size_t max_len = 3);

/// A random canonical element of the topological full group. Single-vertex
/// graphs use random tree pairs with `expansions` leaf splits on each side;
/// other graphs multiply `expansions` random cylinder transpositions.
Table random_full_group_table(const GraphRef& g, Rng& rng, std::size_t expansions = 3);

/// A transposition of two random unrelated cylinders with a common terminal
/// vertex, fixing the rest.
Table random_transposition(const GraphRef& g, Rng& rng, std::size_t max_len = 3);

/// A product of `factors` random shifts and cylinder swaps, with windows of
/// length <= 2 and swap distances <= max_distance.
CocycleElement random_cocycle(const SubshiftRef& s, Rng& rng, std::size_t factors = 2, long max_distance = 1);

BiPoint random_bipoint(const Subshift& s, Rng& rng, std::size_t max_len = 4);

}  // namespace tfg
