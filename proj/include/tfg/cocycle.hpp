#pragma once

#include <map>
#include <vector>

#include "tfg/subshift.hpp"

namespace tfg {

/// The cylinder {x : x[offset .. offset + |window| - 1] = window} with value k.
/// An empty window is the whole subshift.
struct CocyclePiece {
  Word window;
  long offset = 0;
  long k = 0;

  auto operator<=>(const CocyclePiece&) const = default;
};

/// An element g of the topological full group of (X, u), stored through its
/// orbit cocycle: g(x) = u^{k(x)}(x) with (u x)_i = x_{i+1}. The cocycle is
/// kept as a lookup table on the admissible words x[-radius .. radius] with
/// the smallest possible radius (radius -1: k is constant), so equal elements
/// have equal representations.
class CocycleElement {
 public:
  const SubshiftRef& subshift() const noexcept { return shift_; }
  int radius() const noexcept { return radius_; }
  const std::map<Word, long>& table() const noexcept { return table_; }

  /// k on the central window x[-radius .. radius]. Throws WindowUndetermined.
  long value(std::string_view central) const;
  long min_k() const;
  long max_k() const;
  /// Pieces covering X, merged along common prefixes of the central window.
  std::vector<CocyclePiece> pieces() const;

  bool operator==(const CocycleElement& o) const { return shift_ == o.shift_ && radius_ == o.radius_ && table_ == o.table_; }

  /// Builds from a radius-r table of every admissible word, reducing the
  /// radius as far as possible. No bijectivity check.
  static CocycleElement from_table(SubshiftRef shift, int radius, std::map<Word, long> table);

 private:
  SubshiftRef shift_;
  int radius_ = -1;
  std::map<Word, long> table_;
};

/// Checks that the piece cylinders partition X (NotPartition) and that their
/// images u^k(C) partition X (NotBijective).
CocycleElement cocycle_validate(const SubshiftRef& shift, const std::vector<CocyclePiece>& pieces);

CocycleElement cocycle_inverse(const CocycleElement& g);
/// g after h: k(x) = k_h(x) + k_g(h(x)). Throws InvalidSubshift on mixed subshifts.
CocycleElement cocycle_compose(const CocycleElement& g, const CocycleElement& h);
/// Throws WindowUndetermined if x's central window is not admissible.
BiPoint cocycle_apply(const CocycleElement& g, const BiPoint& x);

CocycleElement cocycle_identity(const SubshiftRef& shift);
CocycleElement shift_power(const SubshiftRef& shift, long k);
/// The involution moving [w at 0] by +d and [w at -d] by -d.
/// Throws NotDisjoint if the two cylinders meet, InvalidSubshift if w is
/// not admissible or d == 0.
CocycleElement cylinder_swap(const SubshiftRef& shift, const Word& w, long d);

/// rho(g)(x) = v^{k_g(q(x))}(x) where k_v(x) != 0, x elsewhere.
/// Throws NotFactorCode if q fails factor_code_check, UnsupportedIteration
/// if |k_g| exceeds the bound.
CocycleElement embed_via_factor(const CocycleElement& v, const BlockCode& q, const CocycleElement& g,
                                long iteration_bound = 16);

}  // namespace tfg
