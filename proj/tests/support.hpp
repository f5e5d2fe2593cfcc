#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// work on unrolled edge sequences and never call the code they check.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tfg/clopen.hpp"
#include "tfg/cocycle.hpp"
#include "tfg/error.hpp"
#include "tfg/graph.hpp"
#include "tfg/homology.hpp"
#include "tfg/point.hpp"
#include "tfg/random.hpp"
#include "tfg/sigma.hpp"
#include "tfg/table.hpp"

namespace tfg::test {

inline GraphRef omega(unsigned n) { return full_shift_graph(n); }

inline Path P(const GraphRef& g, const std::string& s) {
  std::vector<std::string> ids;
  for (char c : s) ids.emplace_back(1, c);
  return path_from_ids(*g, ids);
}

inline Path P(const GraphRef& g, const std::string& s, const std::string& origin) {
  std::vector<std::string> ids;
  for (char c : s) ids.emplace_back(1, c);
  return path_from_ids(*g, ids, origin);
}

inline Table T(const GraphRef& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<PathPair> ps;
  for (const auto& [v, w] : pairs) ps.push_back({P(g, v), P(g, w)});
  return Table::from_pairs(g, std::move(ps));
}

inline ClopenSet C(const GraphRef& g, const std::vector<std::string>& paths) {
  std::vector<Path> ps;
  for (const auto& p : paths) ps.push_back(P(g, p));
  return ClopenSet::normalize(g, std::move(ps));
}

inline Point X(const GraphRef& g, const std::string& prefix, const std::string& cycle) {
  return Point::make(*g, prefix.empty() ? empty_path(P(g, cycle).origin) : P(g, prefix), P(g, cycle));
}

/// First n edges of the point.
inline std::vector<EdgeId> unroll(const Point& x, std::size_t n) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(x.at(i));
  return out;
}

/// Prefix replacement on a raw edge sequence, by scanning the pairs directly.
/// nullopt when no w is a prefix of the sequence (the sequence must be long
/// enough to decide, which callers guarantee by unrolling generously).
inline std::optional<std::vector<EdgeId>> oracle_apply(const Table& t, const std::vector<EdgeId>& seq,
                                                       VertexId origin) {
  std::optional<std::vector<EdgeId>> hit;
  for (const auto& p : t.pairs()) {
    if (p.w.origin != origin || p.w.size() > seq.size()) continue;
    if (!std::equal(p.w.edges.begin(), p.w.edges.end(), seq.begin())) continue;
    std::vector<EdgeId> out = p.v.edges;
    out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(p.w.size()), seq.end());
    hit = out;
  }
  return hit;
}

/// Origin vertex of the image sequence under the matching pair.
inline std::optional<VertexId> oracle_image_origin(const Table& t, const std::vector<EdgeId>& seq, VertexId origin) {
  for (const auto& p : t.pairs())
    if (p.w.origin == origin && p.w.size() <= seq.size() &&
        std::equal(p.w.edges.begin(), p.w.edges.end(), seq.begin()))
      return p.v.origin;
  return std::nullopt;
}

/// Membership of a point in a union of cylinders, by symbol comparison.
inline bool oracle_member(const std::vector<Path>& cylinders, const Point& x) {
  for (const auto& p : cylinders) {
    if (p.origin != x.origin()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) ok = x.at(i) == p.edges[i];
    if (ok) return true;
  }
  return false;
}

/// All finite paths of exactly n edges.
inline std::vector<Path> all_paths(const DirectedGraph& g, std::size_t n) {
  std::vector<Path> layer;
  for (VertexId v = 0; v < g.vertex_count(); ++v) layer.push_back(empty_path(v));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (EdgeId e : g.out_edges(terminal(g, p))) next.push_back(extend(p, e));
    layer = std::move(next);
  }
  return layer;
}

struct NamedSystem {
  std::string name;
  SigmaSystem system;
};

/// Valid Sigma-systems used by the property tests.
inline std::vector<NamedSystem> sample_systems(std::uint64_t seed = 7) {
  std::vector<NamedSystem> out;
  GraphRef o2 = omega(2), o3 = omega(3), gm = golden_mean_graph();
  out.push_back({"defining Omega_2", SigmaSystem::defining(o2)});
  out.push_back({"shrink to C_0", SigmaSystem::validate(o2, o2, {T(o2, {{"0", "00"}}), T(o2, {{"0", "01"}})})});
  out.push_back({"shrink to C_10", SigmaSystem::validate(o2, o2, {T(o2, {{"10", "100"}}), T(o2, {{"10", "101"}})})});
  out.push_back({"Omega_2 into Omega_3",
                 SigmaSystem::validate(o2, o3,
                                       {T(o3, {{"0", "00"}, {"1", "01"}}),
                                        T(o3, {{"00", "02"}, {"01", "10"}, {"02", "11"}, {"1", "12"}})})});
  out.push_back({"defining golden mean", SigmaSystem::defining(gm)});
  // h S_e h^{-1} for a fixed random full-group element h.
  Rng rng(seed);
  Table h = random_full_group_table(o3, rng, 3);
  std::vector<Table> conj;
  for (EdgeId e = 0; e < o3->edge_count(); ++e) conj.push_back(compose(h, compose(SigmaSystem::defining(o3).table(e), inverse(h))));
  out.push_back({"conjugated defining Omega_3", SigmaSystem::validate(o3, o3, std::move(conj))});
  return out;
}

/// Elements of a finite abelian group Z/d_1 + ... + Z/d_k as coordinate vectors.
inline std::vector<std::vector<long>> group_elements(const std::vector<long>& orders) {
  std::vector<std::vector<long>> out{{}};
  for (long d : orders) {
    std::vector<std::vector<long>> next;
    for (const auto& x : out)
      for (long c = 0; c < d; ++c) {
        auto y = x;
        y.push_back(c);
        next.push_back(std::move(y));
      }
    out = std::move(next);
  }
  return out;
}

/// For a finite A = sum Z/alpha_i, B = sum Z/beta_j and a in A: the set of all
/// phi(a) over homomorphisms phi : A -> B. phi is any choice of generator
/// images y_i with alpha_i y_i = 0, so the set is the sum of a_i * B[alpha_i].
inline std::set<std::vector<long>> oracle_hom_images(const std::vector<long>& alpha, const std::vector<long>& beta,
                                                     const std::vector<long>& a) {
  const auto elems = group_elements(beta);
  auto add = [&](const std::vector<long>& x, const std::vector<long>& y, long k) {
    std::vector<long> z(beta.size());
    for (std::size_t j = 0; j < beta.size(); ++j) z[j] = ((x[j] + k * y[j]) % beta[j] + beta[j]) % beta[j];
    return z;
  };
  std::set<std::vector<long>> reach{std::vector<long>(beta.size(), 0)};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<std::vector<long>> torsion;
    for (const auto& y : elems) {
      auto t = add(std::vector<long>(beta.size(), 0), y, alpha[i]);
      if (std::all_of(t.begin(), t.end(), [](long c) { return c == 0; })) torsion.push_back(y);
    }
    std::set<std::vector<long>> next;
    for (const auto& r : reach)
      for (const auto& y : torsion) next.insert(add(r, y, a[i]));
    reach = std::move(next);
  }
  return reach;
}

/// All abelian groups of order n as invariant factor lists d_1 | d_2 | ...
inline std::vector<std::vector<long>> abelian_groups_of_order(long n) {
  std::vector<std::vector<long>> out;
  // Invariant factors d_1 | ... | d_k with product n and d_1 > 1, built from the top.
  auto rec = [&](auto&& self, long remaining, long bound, std::vector<long>& acc) -> void {
    if (remaining == 1) {
      std::vector<long> g(acc.rbegin(), acc.rend());
      out.push_back(g);
      return;
    }
    for (long d = 2; d <= remaining && d <= bound; ++d) {
      if (remaining % d != 0 || bound % d != 0) continue;
      acc.push_back(d);
      self(self, remaining / d, d, acc);
      acc.pop_back();
    }
  };
  std::vector<long> acc;
  if (n == 1) return {{}};
  for (long top = 2; top <= n; ++top) {
    if (n % top != 0) continue;
    acc = {top};
    rec(rec, n / top, top, acc);
  }
  return out;
}

/// Cocycle value at the BiPoint, by scanning pieces (the oracle for the
/// table-based evaluation).
inline std::optional<long> oracle_cocycle_value(const std::vector<CocyclePiece>& pieces, const BiPoint& x) {
  std::optional<long> k;
  for (const auto& p : pieces)
    if (x.window(p.offset, p.window.size()) == p.window) {
      if (k) return std::nullopt;
      k = p.k;
    }
  return k;
}

}  // namespace tfg::test
