#include "tfg/metrics.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <omp.h>

namespace tfg {

BigInt word_complexity(const GraphRef& graph, std::size_t n) {
  if (n == 0) return BigInt(static_cast<unsigned long>(graph->vertex_count()));
  const IntegerMatrix m = graph->adjacency();
  // counts[y] = number of paths of the current length ending at y
  std::vector<BigInt> counts(graph->vertex_count(), BigInt(1));
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<BigInt> next(counts.size());
    for (std::size_t x = 0; x < counts.size(); ++x)
      for (std::size_t y = 0; y < counts.size(); ++y)
        if (m(x, y) != 0) next[y] += counts[x] * m(x, y);
    counts = std::move(next);
  }
  BigInt total = 0;
  for (const auto& c : counts) total += c;
  return total;
}

std::vector<BigInt> complexity_series(const GraphRef& graph, std::size_t max_n) {
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(word_complexity(graph, n));
  return out;
}

template <class Vertex>
std::size_t LabeledBall<Vertex>::size_within(std::size_t r) const {
  return static_cast<std::size_t>(std::count_if(depth.begin(), depth.end(), [r](std::size_t d) { return d <= r; }));
}

template struct LabeledBall<Point>;
template struct LabeledBall<Germ>;

namespace {

// Policy objects giving the S_e and S_e^{-1} moves on each kind of vertex.
struct PointMoves {
  const DirectedGraph& g;

  std::optional<Point> forward(const Point& y, EdgeId e) const {
    if (y.at(0) != e) return std::nullopt;
    return y.drop(g, 1);
  }
  std::optional<Point> backward(const Point& y, EdgeId e) const {
    if (g.edge(e).to != y.origin()) return std::nullopt;
    return y.prepend(g, make_path(g, {e}));
  }
};

struct GermMoves {
  const DirectedGraph& g;

  std::optional<Germ> forward(const Germ& germ, EdgeId e) const {
    Point target = germ_target(g, germ);
    if (target.at(0) != e) return std::nullopt;
    PathPair p{germ.v, germ.w};
    if (!p.v.empty()) {
      p.v = drop_front(g, p.v, 1);
    } else {
      p.v = empty_path(g.edge(e).to);
      p.w = extend(p.w, e);
    }
    p = reduce_pair(std::move(p));
    return Germ{germ.base, std::move(p.v), std::move(p.w)};
  }
  std::optional<Germ> backward(const Germ& germ, EdgeId e) const {
    if (g.edge(e).to != germ.v.origin) return std::nullopt;
    PathPair p{concat(g, make_path(g, {e}), germ.v), germ.w};
    p = reduce_pair(std::move(p));
    return Germ{germ.base, std::move(p.v), std::move(p.w)};
  }
};

template <class Vertex, class Moves>
LabeledBall<Vertex> bfs_ball(const DirectedGraph& g, const Moves& moves, Vertex root, std::size_t radius) {
  LabeledBall<Vertex> ball;
  ball.radius = radius;
  std::map<Vertex, std::size_t> index;
  auto visit = [&](Vertex v, std::size_t d) {
    if (index.contains(v)) return;
    index.emplace(v, ball.vertices.size());
    ball.vertices.push_back(std::move(v));
    ball.depth.push_back(d);
  };
  visit(std::move(root), 0);
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const std::size_t d = ball.depth[i];
    if (d >= radius) continue;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (auto next = moves.forward(ball.vertices[i], e)) visit(std::move(*next), d + 1);
      if (auto next = moves.backward(ball.vertices[i], e)) visit(std::move(*next), d + 1);
    }
  }
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (auto next = moves.forward(ball.vertices[i], e)) {
        auto it = index.find(*next);
        if (it != index.end()) ball.edges.push_back(BallEdge{i, it->second, e, false});
      }
  return ball;
}

}  // namespace

OrbitalBall orbital_ball(const GraphRef& graph, const Point& root, std::size_t radius) {
  return bfs_ball<Point>(*graph, PointMoves{*graph}, root, radius);
}

CayleyBall cayley_ball(const GraphRef& graph, const Point& base, std::size_t radius) {
  Germ unit{base, empty_path(base.origin()), empty_path(base.origin())};
  return bfs_ball<Germ>(*graph, GermMoves{*graph}, std::move(unit), radius);
}

template <class Vertex>
bool is_tree(const LabeledBall<Vertex>& ball) {
  return ball.edges.size() + 1 == ball.vertices.size();
}

template bool is_tree(const LabeledBall<Point>&);
template bool is_tree(const LabeledBall<Germ>&);

namespace {

std::vector<std::size_t> sample_sizes(const GraphRef& graph, const Point& x, std::size_t max_radius) {
  OrbitalBall ball = orbital_ball(graph, x, max_radius);
  std::vector<std::size_t> sizes(max_radius + 1, 0);
  for (std::size_t d : ball.depth) ++sizes[d];
  for (std::size_t r = 1; r <= max_radius; ++r) sizes[r] += sizes[r - 1];
  return sizes;
}

std::vector<std::size_t> max_merge(const std::vector<std::vector<std::size_t>>& per_sample, std::size_t max_radius) {
  std::vector<std::size_t> out(max_radius + 1, 0);
  for (const auto& sizes : per_sample)
    for (std::size_t r = 0; r <= max_radius; ++r) out[r] = std::max(out[r], sizes[r]);
  return out;
}

}  // namespace

std::vector<std::size_t> growth_table(const GraphRef& graph, const std::vector<Point>& samples,
                                      std::size_t max_radius) {
  std::vector<std::vector<std::size_t>> per_sample(samples.size());
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) per_sample[i] = sample_sizes(graph, samples[i], max_radius);
  return max_merge(per_sample, max_radius);
}

std::vector<std::size_t> growth_table_serial(const GraphRef& graph, const std::vector<Point>& samples,
                                             std::size_t max_radius) {
  std::vector<std::vector<std::size_t>> per_sample;
  per_sample.reserve(samples.size());
  for (const auto& x : samples) per_sample.push_back(sample_sizes(graph, x, max_radius));
  return max_merge(per_sample, max_radius);
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string germ_label(const DirectedGraph& g, const Germ& germ) {
  return "(" + to_string(g, germ.v) + ", " + to_string(g, germ.w) + ")";
}

template <class Vertex, class Label>
std::string dot_impl(const DirectedGraph& g, const LabeledBall<Vertex>& ball, const char* name, Label label) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    os << "  v" << i << " [label=" << quote(label(ball.vertices[i])) << (i == 0 ? ", shape=doublecircle" : "")
       << "];\n";
  for (const auto& e : ball.edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=" << quote(g.edge(e.generator).id) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const DirectedGraph& g, const OrbitalBall& ball) {
  return dot_impl(g, ball, "orbital", [&](const Point& x) { return to_string(g, x); });
}

std::string to_dot(const DirectedGraph& g, const CayleyBall& ball) {
  return dot_impl(g, ball, "cayley", [&](const Germ& x) { return germ_label(g, x); });
}

}  // namespace tfg
