#pragma once

#include <json.hpp>

#include "tfg/clopen.hpp"
#include "tfg/cocycle.hpp"
#include "tfg/graph.hpp"
#include "tfg/homology.hpp"
#include "tfg/metrics.hpp"
#include "tfg/point.hpp"
#include "tfg/sigma.hpp"
#include "tfg/subshift.hpp"
#include "tfg/table.hpp"

namespace tfg::io {

using Json = nlohmann::json;

// Readers throw nlohmann::json exceptions on malformed documents and
// tfg::Error on mathematically invalid content.

/// Validated graph from {"vertices":[...], "edges":[{"id","from","to"}]}.
GraphRef read_graph(const Json& j);
Json write_graph(const DirectedGraph& g);

/// {"edges":[ids], "origin":vertex?}. A bare string is accepted as shorthand:
/// single-character edge ids, or ids separated by '.'.
Path read_path(const DirectedGraph& g, const Json& j);
Json write_path(const DirectedGraph& g, const Path& p);

ClopenSet read_clopen(const GraphRef& g, const Json& j);
Json write_clopen(const ClopenSet& c);

Point read_point(const DirectedGraph& g, const Json& j);
Json write_point(const DirectedGraph& g, const Point& x);
std::vector<Point> read_points(const DirectedGraph& g, const Json& j);

/// Validated (not canonicalized) table.
Table read_table(const GraphRef& g, const Json& j);
Json write_table(const Table& t);

Json write_germ(const DirectedGraph& g, const Germ& germ);

/// {"components":[path], "sigma":[1-based one-line permutation]}.
Table read_multisection_element(const GraphRef& g, const Json& j);

SigmaSystem read_sigma_system(const Json& j);
Json write_sigma_system(const SigmaSystem& sys);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json write_integer(const BigInt& n);
Json write_group(const AbelianGroup& a);
Json write_witness(const HomWitness& w);

template <class Vertex>
Json write_ball(const DirectedGraph& g, const LabeledBall<Vertex>& ball);

SubshiftRef read_subshift(const Json& j);
Json write_subshift(const Subshift& s);

CocycleElement read_cocycle(const SubshiftRef& s, const Json& j);
Json write_cocycle(const CocycleElement& g);

BlockCode read_code(const SubshiftRef& source, const SubshiftRef& target, const Json& j);

/// {"left", "center", "right", "start"}.
BiPoint read_bipoint(const Json& j);
Json write_bipoint(const BiPoint& x);

}  // namespace tfg::io
