#include "tfg/cocycle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "tfg/error.hpp"

namespace tfg {

namespace {

std::vector<Word> central_words(const Subshift& s, int radius) {
  if (radius < 0) return {Word{}};
  return s.words(2 * static_cast<std::size_t>(radius) + 1);
}

// The window x[-r .. r] inside a word V = x[-R .. R].
std::string_view middle(std::string_view v, int outer, int r) {
  if (r < 0) return {};
  return v.substr(static_cast<std::size_t>(outer - r), 2 * static_cast<std::size_t>(r) + 1);
}

void require_same_shift(const SubshiftRef& a, const SubshiftRef& b) {
  if (a != b) throw Error(ErrorCode::InvalidSubshift, "elements live on different subshifts");
}

// Images u^k(C_W) of the table cylinders partition X.
bool is_bijective(const Subshift& s, int radius, const std::map<Word, long>& table) {
  if (radius < 0) return true;
  std::set<long> ks;
  long reach = 0;
  for (const auto& [w, k] : table) {
    ks.insert(k);
    reach = std::max(reach, std::labs(k));
  }
  const int outer = radius + static_cast<int>(reach);
  for (const auto& v : central_words(s, outer)) {
    int hits = 0;
    for (long k : ks) {
      auto it = table.find(Word(v.substr(static_cast<std::size_t>(outer - radius - k), 2 * radius + 1)));
      if (it != table.end() && it->second == k) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace

CocycleElement CocycleElement::from_table(SubshiftRef shift, int radius, std::map<Word, long> table) {
  while (radius >= 0) {
    std::map<Word, long> reduced;
    bool uniform = true;
    for (const auto& [w, k] : table) {
      Word mid(middle(w, radius, radius - 1));
      auto [it, fresh] = reduced.emplace(std::move(mid), k);
      if (!fresh && it->second != k) {
        uniform = false;
        break;
      }
    }
    if (!uniform) break;
    table = std::move(reduced);
    --radius;
  }
  CocycleElement g;
  g.shift_ = std::move(shift);
  g.radius_ = radius;
  g.table_ = std::move(table);
  return g;
}

long CocycleElement::value(std::string_view central) const {
  auto it = table_.find(Word(central));
  if (it == table_.end())
    throw Error(ErrorCode::WindowUndetermined, "window '" + Word(central) + "' is not admissible");
  return it->second;
}

long CocycleElement::min_k() const {
  long m = table_.begin()->second;
  for (const auto& [w, k] : table_) m = std::min(m, k);
  return m;
}

long CocycleElement::max_k() const {
  long m = table_.begin()->second;
  for (const auto& [w, k] : table_) m = std::max(m, k);
  return m;
}

std::vector<CocyclePiece> CocycleElement::pieces() const {
  std::vector<CocyclePiece> out;
  if (radius_ < 0) {
    out.push_back({Word{}, 0, table_.begin()->second});
    return out;
  }
  auto walk = [&](auto&& self, const Word& prefix) -> void {
    auto first = table_.lower_bound(prefix);
    bool uniform = true;
    bool any = false;
    long k = 0;
    for (auto it = first; it != table_.end() && it->first.compare(0, prefix.size(), prefix) == 0; ++it) {
      if (!any) k = it->second;
      any = true;
      uniform = uniform && it->second == k;
    }
    if (!any) return;
    if (uniform) {
      out.push_back({prefix, -radius_, k});
      return;
    }
    for (char c : shift_->alphabet()) self(self, prefix + c);
  };
  walk(walk, Word{});
  return out;
}

CocycleElement cocycle_validate(const SubshiftRef& shift, const std::vector<CocyclePiece>& pieces) {
  if (pieces.empty()) throw Error(ErrorCode::NotPartition, "no pieces");
  int radius = -1;
  for (const auto& p : pieces) {
    for (char c : p.window)
      if (shift->alphabet().find(c) == std::string::npos)
        throw Error(ErrorCode::UnknownLetter, std::string("letter '") + c + "' is not in the alphabet");
    if (p.window.empty()) continue;
    const long last = p.offset + static_cast<long>(p.window.size()) - 1;
    radius = std::max<int>(radius, static_cast<int>(std::max(std::labs(p.offset), std::labs(last))));
  }
  std::map<Word, long> table;
  for (const auto& v : central_words(*shift, radius)) {
    const CocyclePiece* hit = nullptr;
    for (const auto& p : pieces) {
      if (!p.window.empty() && v.compare(static_cast<std::size_t>(p.offset + radius), p.window.size(), p.window) != 0)
        continue;
      if (hit) throw Error(ErrorCode::NotPartition, "pieces overlap on the window '" + v + "'");
      hit = &p;
    }
    if (!hit) throw Error(ErrorCode::NotPartition, "no piece covers the window '" + v + "'");
    table.emplace(v, hit->k);
  }
  CocycleElement g = CocycleElement::from_table(shift, radius, std::move(table));
  if (!is_bijective(*shift, g.radius(), g.table()))
    throw Error(ErrorCode::NotBijective, "the shifted piece images do not partition the subshift");
  return g;
}

CocycleElement cocycle_inverse(const CocycleElement& g) {
  if (g.radius() < 0) return shift_power(g.subshift(), -g.min_k());
  const int r = g.radius();
  std::set<long> ks;
  for (const auto& [w, k] : g.table()) ks.insert(k);
  const int outer = r + static_cast<int>(std::max(std::labs(g.min_k()), std::labs(g.max_k())));
  std::map<Word, long> table;
  for (const auto& v : central_words(*g.subshift(), outer)) {
    for (long k : ks) {
      auto it = g.table().find(Word(v.substr(static_cast<std::size_t>(outer - r - k), 2 * r + 1)));
      if (it != g.table().end() && it->second == k) {
        table.emplace(v, -k);
        break;
      }
    }
    if (!table.contains(v)) throw Error(ErrorCode::NotBijective, "no preimage for the window '" + v + "'");
  }
  return CocycleElement::from_table(g.subshift(), outer, std::move(table));
}

CocycleElement cocycle_compose(const CocycleElement& g, const CocycleElement& h) {
  require_same_shift(g.subshift(), h.subshift());
  const int rg = g.radius(), rh = h.radius();
  long lo = 0, hi = 0;
  bool constant = true;
  if (rh >= 0) {
    lo = std::min<long>(lo, -rh);
    hi = std::max<long>(hi, rh);
    constant = false;
  }
  if (rg >= 0) {
    lo = std::min(lo, h.min_k() - rg);
    hi = std::max(hi, h.max_k() + rg);
    constant = false;
  }
  const int outer = constant ? -1 : static_cast<int>(std::max(-lo, hi));
  std::map<Word, long> table;
  for (const auto& v : central_words(*g.subshift(), outer)) {
    const long kh = h.value(middle(v, outer, rh));
    const long kg = rg < 0 ? g.value({}) : g.value(std::string_view(v).substr(static_cast<std::size_t>(outer + kh - rg), 2 * rg + 1));
    table.emplace(v, kh + kg);
  }
  return CocycleElement::from_table(g.subshift(), outer, std::move(table));
}

BiPoint cocycle_apply(const CocycleElement& g, const BiPoint& x) {
  const int r = g.radius();
  const long k = r < 0 ? g.value({}) : g.value(x.window(-r, 2 * static_cast<std::size_t>(r) + 1));
  return x.shifted(k);
}

CocycleElement cocycle_identity(const SubshiftRef& shift) { return shift_power(shift, 0); }

CocycleElement shift_power(const SubshiftRef& shift, long k) {
  return CocycleElement::from_table(shift, -1, {{Word{}, k}});
}

CocycleElement cylinder_swap(const SubshiftRef& shift, const Word& w, long d) {
  if (d == 0) throw Error(ErrorCode::InvalidSubshift, "swap distance must be non-zero");
  if (w.empty() || !shift->admits(w)) throw Error(ErrorCode::InvalidSubshift, "swap window '" + w + "' is not admissible");
  const long len = static_cast<long>(w.size());
  const long lo = std::min(0L, -d), hi = std::max(len - 1, len - 1 - d);
  for (const auto& u : shift->words(static_cast<std::size_t>(hi - lo + 1)))
    if (u.compare(static_cast<std::size_t>(-lo), w.size(), w) == 0 &&
        u.compare(static_cast<std::size_t>(-d - lo), w.size(), w) == 0)
      throw Error(ErrorCode::NotDisjoint, "the cylinders of '" + w + "' at 0 and at " + std::to_string(-d) + " meet");
  const int outer = static_cast<int>(std::max(-lo, hi));
  std::map<Word, long> table;
  for (const auto& v : central_words(*shift, outer)) {
    long k = 0;
    if (v.compare(static_cast<std::size_t>(outer), w.size(), w) == 0) k = d;
    else if (v.compare(static_cast<std::size_t>(outer - d), w.size(), w) == 0) k = -d;
    table.emplace(v, k);
  }
  return CocycleElement::from_table(shift, outer, std::move(table));
}

CocycleElement embed_via_factor(const CocycleElement& v, const BlockCode& q, const CocycleElement& g,
                                long iteration_bound) {
  if (q.source != v.subshift()) throw Error(ErrorCode::InvalidSubshift, "code source is not the subshift of v");
  if (q.target != g.subshift()) throw Error(ErrorCode::InvalidSubshift, "code target is not the subshift of g");
  const int rq = q.radius;
  const int rg = g.radius();
  const std::size_t depth = std::max(2 * static_cast<std::size_t>(rq + std::max(rg, 0)) + 1, default_check_depth(q));
  if (!factor_code_check(q, depth).images_admissible)
    throw Error(ErrorCode::NotFactorCode, "the code sends admissible words outside the target");
  const long kmin = g.min_k(), kmax = g.max_k();
  if (std::max(std::labs(kmin), std::labs(kmax)) > iteration_bound)
    throw Error(ErrorCode::UnsupportedIteration,
                "cocycle values reach " + std::to_string(std::max(std::labs(kmin), std::labs(kmax))) +
                    ", above the bound " + std::to_string(iteration_bound));

  const SubshiftRef& x2 = v.subshift();
  std::map<long, CocycleElement> powers{{0, cocycle_identity(x2)}};
  const CocycleElement v_inv = cocycle_inverse(v);
  for (long n = 1; n <= kmax; ++n) powers.emplace(n, cocycle_compose(v, powers.at(n - 1)));
  for (long n = -1; n >= kmin; --n) powers.emplace(n, cocycle_compose(v_inv, powers.at(n + 1)));

  int outer = std::max(v.radius(), rg >= 0 ? rg + rq : -1);
  for (const auto& [n, p] : powers) outer = std::max(outer, p.radius());
  std::map<Word, long> table;
  for (const auto& w : central_words(*x2, outer)) {
    long k = 0;
    if (v.value(middle(w, outer, v.radius())) != 0) {
      const long n = rg < 0 ? g.value({}) : g.value(q.image(middle(w, outer, rg + rq)));
      const CocycleElement& p = powers.at(n);
      k = p.value(middle(w, outer, p.radius()));
    }
    table.emplace(w, k);
  }
  CocycleElement rho = CocycleElement::from_table(x2, outer, std::move(table));
  if (!is_bijective(*x2, rho.radius(), rho.table()))
    throw Error(ErrorCode::NotBijective, "the induced map is not a bijection");
  return rho;
}

}  // namespace tfg
