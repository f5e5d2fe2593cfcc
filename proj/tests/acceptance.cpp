// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>

#include "support.hpp"
#include "tfg/metrics.hpp"

using namespace tfg;
using namespace tfg::test;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) {
    r.pass = false;
    r.detail += "; over the " + std::to_string(limit_s) + " s limit";
  }
  if (!r.pass) ++failures;
  std::printf("%s %2d  %-44s %8.3f s  %s\n", r.pass ? "PASS" : "FAIL", id, title.c_str(), s, r.detail.c_str());
  std::fflush(stdout);
}

std::string count(std::size_t checks, std::size_t bad) {
  return std::to_string(checks) + " checks, " + std::to_string(bad) + " failures";
}

// Determinant by cofactor expansion, for the H0 order oracle.
BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  if (m.empty()) return 1;
  BigInt sum = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < m.size(); ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    BigInt t = m[0][j] * cofactor_det(minor);
    sum += j % 2 == 0 ? t : BigInt(-t);
  }
  return sum;
}

BigInt order_of(const AbelianGroup& a) {
  if (a.rank() > 0) return 0;
  BigInt n = 1;
  for (const auto& d : a.torsion()) n *= d;
  return n;
}

// |det(I - M^T)| read straight off the edge list.
BigInt oracle_h0_order(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) m[g.edge(e).to][g.edge(e).from] -= 1;
  return abs(cofactor_det(m));
}

std::optional<std::vector<EdgeId>> apply_seq(const Table& t, const std::vector<EdgeId>& seq, VertexId origin,
                                             VertexId& image_origin) {
  auto out = oracle_apply(t, seq, origin);
  if (out) image_origin = *oracle_image_origin(t, seq, origin);
  return out;
}

bool acyclic(const CayleyBall& ball) {
  std::vector<std::size_t> parent(ball.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : ball.edges) {
    std::size_t a = find(e.from), b = find(e.to);
    if (a == b) return false;
    parent[a] = b;
  }
  return ball.edges.size() + 1 == ball.size();
}

BlockCode xor_code(const SubshiftRef& s) {
  BlockCode q{1, {}, s, s};
  for (char a : std::string("01"))
    for (char b : std::string("01"))
      for (char c : std::string("01")) q.rule[std::string{a, b, c}] = b == c ? '0' : '1';
  return q;
}

}  // namespace

int main() {
  // Runs first: every other table check relies on the product convention.
  criterion(11, "pair-product convention gate", 0, [] {
    Rng rng(1101);
    std::size_t checks = 0, bad = 0;
    const GraphRef graphs[] = {omega(2), omega(3), golden_mean_graph()};
    for (int i = 0; i < 1000; ++i) {
      const GraphRef& g = graphs[i % 3];
      PathPair p1 = random_pair(*g, rng, 3), p2 = random_pair(*g, rng, 3);
      // Half the time, line the first pair up with the image of the second.
      if (i % 2 == 0) {
        Path tail = random_path(*g, rng, 2, terminal(*g, p2.v));
        Path w1 = concat(*g, p2.v, tail);
        Path v1 = random_path(*g, rng, 2, std::nullopt);
        while (terminal(*g, v1) != terminal(*g, w1)) v1 = random_path(*g, rng, 2, std::nullopt);
        p1 = {v1, w1};
      }
      Table t1 = Table::from_pairs(g, {p1}), t2 = Table::from_pairs(g, {p2});
      Table prod = compose(t1, t2);
      Point x = random_point(*g, rng);
      if (i % 4 != 3) {
        while (x.origin() != terminal(*g, p2.w)) x = random_point(*g, rng);
        x = x.prepend(*g, p2.w);
      }
      const auto seq = unroll(x, 48);
      VertexId o2 = 0, o1 = 0;
      std::optional<std::vector<EdgeId>> expect;
      if (auto mid = apply_seq(t2, seq, x.origin(), o2)) expect = apply_seq(t1, *mid, o2, o1);
      ++checks;
      try {
        Point y = apply(prod, x);
        if (!expect || y.origin() != o1 ||
            unroll(y, 30) != std::vector<EdgeId>(expect->begin(), expect->begin() + 30))
          ++bad;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotInDomain || expect) ++bad;
      }
    }
    return Outcome{bad == 0, count(checks, bad)};
  });

  criterion(1, "Thompson divisibility grid", 1.0, [] {
    std::size_t checks = 0, bad = 0;
    for (unsigned n = 2; n <= 10; ++n)
      for (unsigned m = 2; m <= 10; ++m) {
        GraphRef gm = omega(m);
        const bool got = embedding_support_obstruction(omega(n), gm, ClopenSet::whole(gm)).has_value();
        ++checks;
        if (got != ((n - 1) % (m - 1) == 0)) ++bad;
      }
    return Outcome{bad == 0 && checks == 81, count(checks, bad)};
  });

  criterion(2, "H0 of full shifts and the golden mean", 1.0, [] {
    std::size_t checks = 0, bad = 0;
    for (unsigned n = 2; n <= 8; ++n) {
      AbelianGroup h = h0_group(omega(n));
      ++checks;
      const bool cyclic = n == 2 ? h.is_trivial() : h.torsion() == std::vector<BigInt>{BigInt(n - 1)};
      if (!cyclic || h.rank() != 0 || order_of(h) != oracle_h0_order(*omega(n))) ++bad;
    }
    GraphRef gm = golden_mean_graph();
    ++checks;
    if (!h0_group(gm).is_trivial() || oracle_h0_order(*gm) != 1) ++bad;
    return Outcome{bad == 0, count(checks, bad)};
  });

  criterion(3, "table algebra against pointwise composition", 30.0, [] {
    Rng rng(303);
    std::size_t checks = 0, bad = 0;
    for (GraphRef g : {omega(2), omega(3)}) {
      std::vector<Table> ts;
      for (int i = 0; i < 250; ++i) ts.push_back(canonicalize(random_full_group_table(g, rng, 3)));
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const Table& a = ts[i];
        const Table& b = ts[(i + 1) % ts.size()];
        const Table& c = ts[(i + 2) % ts.size()];
        Table ab = compose(a, b);
        for (int k = 0; k < 20; ++k) {
          Point x = random_point(*g, rng);
          ++checks;
          if (apply(ab, x) != apply(a, apply(b, x))) ++bad;
        }
        checks += 3;
        if (compose(ab, c) != compose(a, compose(b, c))) ++bad;
        if (compose(a, inverse(a)) != Table::identity(g)) ++bad;
        if (compose(inverse(a), a) != Table::identity(g)) ++bad;
      }
    }
    return Outcome{bad == 0, count(checks, bad)};
  });

  criterion(4, "expansion and contraction confluence", 0, [] {
    Rng rng(404);
    std::size_t checks = 0, bad = 0;
    const GraphRef graphs[] = {omega(2), omega(3), golden_mean_graph()};
    for (int i = 0; i < 200; ++i) {
      Table t = canonicalize(random_full_group_table(graphs[i % 3], rng, 3));
      Table e = t;
      const int steps = std::uniform_int_distribution<int>(1, 5)(rng);
      for (int s = 0; s < steps; ++s) {
        std::vector<std::size_t> idx{std::uniform_int_distribution<std::size_t>(0, e.pairs().size() - 1)(rng)};
        if (rng() % 2 && e.pairs().size() > 1) idx.push_back((idx[0] + 1) % e.pairs().size());
        std::sort(idx.begin(), idx.end());
        e = simple_expand(e, idx);
      }
      ++checks;
      if (canonicalize(e) != t || !equals(e, t)) ++bad;
    }
    return Outcome{bad == 0, count(checks, bad)};
  });

  criterion(5, "Sigma-system homomorphism property", 60.0, [] {
    Rng rng(505);
    std::size_t checks = 0, bad = 0;
    const auto systems = sample_systems();
    for (const auto& [name, sys] : systems)
      for (int i = 0; i < 100; ++i) {
        Table g = random_full_group_table(sys.source_graph(), rng, 3);
        Table h = random_full_group_table(sys.source_graph(), rng, 3);
        ++checks;
        if (!equals(induced_hom(sys, compose(g, h), true),
                    compose(induced_hom(sys, g, true), induced_hom(sys, h, true))))
          ++bad;
      }
    return Outcome{bad == 0 && systems.size() >= 5, count(checks, bad) + ", " + std::to_string(systems.size()) + " systems"};
  });

  criterion(6, "coding-map equivariance", 0, [] {
    Rng rng(606);
    std::size_t checks = 0, bad = 0, thin = 0;
    for (const auto& [name, sys] : sample_systems()) {
      const DirectedGraph& tgt = *sys.target_graph();
      std::size_t sampled = 0;
      for (int attempt = 0; attempt < 20000 && sampled < 60; ++attempt) {
        Point y = random_point(tgt, rng, 5, 4);
        if (!sys.domain().contains(y)) continue;
        ++sampled;
        const auto q = coding_map(sys, y, 9);
        for (EdgeId e = 0; e < sys.source_graph()->edge_count(); ++e) {
          const bool in_source = source(sys.table(e)).contains(y);
          ++checks;
          if (in_source != (q[0] == e)) {
            ++bad;
            continue;
          }
          if (!in_source) continue;
          // q(T_e y) = S_e q(y)
          ++checks;
          if (coding_map(sys, apply(sys.table(e), y), 8) != std::vector<EdgeId>(q.begin() + 1, q.end())) ++bad;
        }
      }
      if (sampled < 50) ++thin;
    }
    return Outcome{bad == 0 && thin == 0, count(checks, bad)};
  });

  criterion(7, "Cayley balls are trees", 0, [] {
    Rng rng(707);
    std::size_t balls = 0, cyclic = 0;
    for (GraphRef g : {omega(2), omega(3), golden_mean_graph()})
      for (int i = 0; i < 20; ++i) {
        Point x = random_point(*g, rng);
        for (std::size_t r = 0; r <= 6; ++r) {
          CayleyBall ball = cayley_ball(g, x, r);
          ++balls;
          if (!is_tree(ball) || !acyclic(ball)) ++cyclic;
        }
      }
    return Outcome{cyclic == 0, std::to_string(balls) + " balls, " + std::to_string(cyclic) + " with cycles"};
  });

  criterion(8, "complexity values", 0, [] {
    std::size_t checks = 0, bad = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
      ++checks;
      if (word_complexity(omega(2), n) != BigInt(1) << static_cast<unsigned>(n)) ++bad;
    }
    GraphRef gm = golden_mean_graph();
    BigInt f1 = 2, f2 = 3;
    for (std::size_t n = 1; n <= 8; ++n) {
      ++checks;
      if (word_complexity(gm, n) != all_paths(*gm, n).size() || word_complexity(gm, n) != f2) ++bad;
      BigInt f3 = f1 + f2;
      f1 = f2;
      f2 = f3;
    }
    SubshiftRef fib = Subshift::substitution("ab", {{'a', "ab"}, {'b', "a"}});
    Word w = "a";
    while (w.size() < 5000) {
      Word next;
      for (char c : w) next += c == 'a' ? "ab" : "a";
      w = next;
    }
    for (std::size_t n = 1; n <= 12; ++n) {
      std::set<Word> direct;
      for (std::size_t i = 0; i + n <= w.size(); ++i) direct.insert(w.substr(i, n));
      const auto words = fib->words(n);
      ++checks;
      if (words.size() != n + 1 || direct.size() != n + 1 || std::set<Word>(words.begin(), words.end()) != direct)
        ++bad;
    }
    return Outcome{bad == 0, count(checks, bad)};
  });

  criterion(9, "hom_exists against exhaustive enumeration", 0, [] {
    std::vector<std::vector<long>> groups;
    for (long n = 1; n <= 36; ++n)
      for (auto& g : abelian_groups_of_order(n)) groups.push_back(g);
    auto to_group = [](const std::vector<long>& ds) {
      std::vector<BigInt> v(ds.begin(), ds.end());
      return AbelianGroup::from_invariants(v);
    };
    std::vector<AbelianGroup> built;
    for (const auto& g : groups) built.push_back(to_group(g));
    std::size_t checks = 0, bad = 0;
    const auto n = static_cast<std::ptrdiff_t>(groups.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : checks, bad)
    for (std::ptrdiff_t ia = 0; ia < n; ++ia) {
      const auto& ga = groups[static_cast<std::size_t>(ia)];
      for (const auto& x : group_elements(ga)) {
        H0Class cx{std::vector<BigInt>(x.begin(), x.end())};
        for (std::size_t ib = 0; ib < groups.size(); ++ib) {
          const auto& gb = groups[ib];
          const auto reach = oracle_hom_images(ga, gb, x);
          for (const auto& y : group_elements(gb)) {
            ++checks;
            const bool got = hom_exists(built[static_cast<std::size_t>(ia)], cx, built[ib],
                                        H0Class{std::vector<BigInt>(y.begin(), y.end())})
                                 .has_value();
            if (got != reach.contains(y)) ++bad;
          }
        }
      }
    }
    return Outcome{bad == 0, std::to_string(groups.size()) + " groups, " + count(checks, bad)};
  });

  criterion(10, "Z-full-group axioms and embedding", 60.0, [] {
    Rng rng(1010);
    SubshiftRef s = Subshift::full_shift("01");
    std::vector<CocycleElement> els;
    for (int i = 0; i < 100; ++i) els.push_back(random_cocycle(s, rng, 2, 1));
    const CocycleElement id = cocycle_identity(s), u = shift_power(s, 1);
    const BlockCode q = xor_code(s);
    std::size_t checks = 0, bad = 0;
    std::vector<CocycleElement> rho;
    for (const auto& g : els) rho.push_back(embed_via_factor(u, q, g));
    for (std::size_t i = 0; i < els.size(); ++i) {
      const auto& a = els[i];
      const auto& b = els[(i + 1) % els.size()];
      const auto& c = els[(i + 2) % els.size()];
      checks += 6;
      if (cocycle_compose(cocycle_compose(a, b), c) != cocycle_compose(a, cocycle_compose(b, c))) ++bad;
      if (cocycle_compose(a, cocycle_inverse(a)) != id) ++bad;
      if (cocycle_compose(cocycle_inverse(a), a) != id) ++bad;
      if (cocycle_compose(a, id) != a || cocycle_compose(id, a) != a) ++bad;
      if (cocycle_inverse(cocycle_inverse(a)) != a) ++bad;
      if (embed_via_factor(u, q, cocycle_compose(a, b)) != cocycle_compose(rho[i], rho[(i + 1) % els.size()])) ++bad;
    }
    ++checks;
    try {
      cocycle_validate(s, {{"1", 0, 1}, {"0", 0, -1}});
      ++bad;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotBijective) ++bad;
    }
    return Outcome{bad == 0, count(checks, bad)};
  });

  return failures == 0 ? 0 : 1;
}
