#include "tfg/random.hpp"

#include <algorithm>
#include <deque>

#include "tfg/clopen.hpp"
#include "tfg/error.hpp"

namespace tfg {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Shortest path from `from` to `to` (possibly empty).
std::vector<EdgeId> shortest_path(const DirectedGraph& g, VertexId from, VertexId to) {
  std::vector<std::optional<EdgeId>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (EdgeId e : g.out_edges(x)) {
      VertexId y = g.edge(e).to;
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = e;
      queue.push_back(y);
    }
  }
  std::vector<EdgeId> out;
  for (VertexId x = to; x != from; x = g.edge(*via[x]).from) out.push_back(*via[x]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Path random_path(const DirectedGraph& g, Rng& rng, std::size_t length, std::optional<VertexId> origin) {
  VertexId x = origin ? *origin : static_cast<VertexId>(uniform(rng, 0, g.vertex_count() - 1));
  Path p = empty_path(x);
  for (std::size_t i = 0; i < length; ++i) {
    auto out = g.out_edges(x);
    EdgeId e = out[uniform(rng, 0, out.size() - 1)];
    p.edges.push_back(e);
    x = g.edge(e).to;
  }
  return p;
}

Point random_point(const DirectedGraph& g, Rng& rng, std::size_t max_prefix, std::size_t max_cycle) {
  Path prefix = random_path(g, rng, uniform(rng, 0, max_prefix));
  const VertexId y = terminal(g, prefix);
  Path cycle = random_path(g, rng, uniform(rng, 1, std::max<std::size_t>(max_cycle, 1)), y);
  for (EdgeId e : shortest_path(g, terminal(g, cycle), y)) cycle.edges.push_back(e);
  return Point::make(g, std::move(prefix), std::move(cycle));
}

PathPair random_pair(const DirectedGraph& g, Rng& rng, std::size_t max_len) {
  Path v = random_path(g, rng, uniform(rng, 0, max_len));
  for (int attempt = 0; attempt < 64; ++attempt) {
    Path w = random_path(g, rng, uniform(rng, 0, max_len));
    if (terminal(g, w) == terminal(g, v)) return {std::move(v), std::move(w)};
  }
  return {v, v};
}

Table random_transposition(const GraphRef& graph, Rng& rng, std::size_t max_len) {
  const DirectedGraph& g = *graph;
  for (int attempt = 0; attempt < 64; ++attempt) {
    PathPair p = random_pair(g, rng, max_len);
    if (!unrelated(p.v, p.w)) continue;
    std::vector<PathPair> pairs{{p.v, p.w}, {p.w, p.v}};
    ClopenSet rest = complement(ClopenSet::normalize(graph, {p.v, p.w}));
    for (const auto& q : rest.paths()) pairs.push_back({q, q});
    return canonicalize(Table::from_pairs(graph, std::move(pairs)));
  }
  return Table::identity(graph);
}

Table random_full_group_table(const GraphRef& graph, Rng& rng, std::size_t expansions) {
  const DirectedGraph& g = *graph;
  if (g.vertex_count() != 1) {
    Table t = Table::identity(graph);
    for (std::size_t i = 0; i < expansions; ++i) t = compose(random_transposition(graph, rng), t);
    return t;
  }
  auto random_code = [&] {
    std::vector<Path> leaves{empty_path(0)};
    for (std::size_t i = 0; i < expansions; ++i) {
      const std::size_t k = uniform(rng, 0, leaves.size() - 1);
      Path leaf = leaves[k];
      leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(k));
      for (EdgeId e = 0; e < g.edge_count(); ++e) leaves.push_back(extend(leaf, e));
    }
    return leaves;
  };
  std::vector<Path> a = random_code(), b = random_code();
  std::shuffle(b.begin(), b.end(), rng);
  std::vector<PathPair> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) pairs.push_back({a[i], b[i]});
  return canonicalize(Table::from_pairs(graph, std::move(pairs)));
}

CocycleElement random_cocycle(const SubshiftRef& s, Rng& rng, std::size_t factors, long max_distance) {
  CocycleElement g = cocycle_identity(s);
  for (std::size_t i = 0; i < factors; ++i) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      if (uniform(rng, 0, 3) == 0) {
        g = cocycle_compose(shift_power(s, uniform(rng, 0, 1) ? 1 : -1), g);
        break;
      }
      const auto words = s->words(uniform(rng, 1, 2));
      const Word& w = words[uniform(rng, 0, words.size() - 1)];
      const long d = static_cast<long>(uniform(rng, 1, static_cast<std::size_t>(std::max(max_distance, 1L)))) *
                     (uniform(rng, 0, 1) ? 1 : -1);
      try {
        g = cocycle_compose(cylinder_swap(s, w, d), g);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDisjoint) throw;
      }
    }
  }
  return g;
}

BiPoint random_bipoint(const Subshift& s, Rng& rng, std::size_t max_len) {
  std::size_t depth = 2;
  for (const auto& f : s.forbidden()) depth = std::max(depth, f.size() + 1);
  const std::string& alphabet = s.alphabet();
  auto word = [&](std::size_t lo) {
    Word w;
    for (std::size_t n = uniform(rng, lo, max_len); n > 0; --n) w += alphabet[uniform(rng, 0, alphabet.size() - 1)];
    return w;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BiPoint x = BiPoint::make(word(1), word(0), word(1), static_cast<long>(uniform(rng, 0, 4)) - 2);
    if (is_admissible(s, x, depth)) return x;
  }
  throw Error(ErrorCode::InvalidPoint, "no admissible eventually periodic point found");
}

}  // namespace tfg
