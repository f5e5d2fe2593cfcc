#pragma once

#include <optional>
#include <vector>

#include "tfg/clopen.hpp"
#include "tfg/graph.hpp"
#include "tfg/matrix.hpp"

namespace tfg {

/// A finitely generated abelian group in invariant-factor normal form
/// Z/d_1 + ... + Z/d_k + Z^r with 1 < d_1 | d_2 | ... | d_k, together with the
/// coordinate map from the generators of its original presentation.
class AbelianGroup {
 public:
  /// Z^n / im(relations), relations being an n x m integer matrix.
  static AbelianGroup cokernel(const IntegerMatrix& relations);
  /// Z/d_1 + ... for arbitrary d_i >= 0 (0 meaning a free factor).
  static AbelianGroup from_invariants(const std::vector<BigInt>& orders);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  /// Order of each normal-form factor: torsion first, then 0 for each free factor.
  std::vector<BigInt> factor_orders() const;
  std::size_t factor_count() const noexcept { return torsion_.size() + rank_; }
  /// Number of generators of the original presentation.
  std::size_t generator_count() const noexcept { return coordinates_.cols(); }
  bool is_trivial() const noexcept { return factor_count() == 0; }

  /// Normal-form coordinates of an element given in the original generators.
  std::vector<BigInt> reduce(const std::vector<BigInt>& generator_coefficients) const;
  /// Reduces normal-form coordinates into [0, d_i) on torsion factors.
  std::vector<BigInt> reduce_normal(std::vector<BigInt> coords) const;

  bool operator==(const AbelianGroup& other) const {
    return rank_ == other.rank_ && torsion_ == other.torsion_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<BigInt> torsion_;
  IntegerMatrix coordinates_;  // factor_count x generator_count
};

/// Coordinates of an element in the normal form of a specific group.
struct H0Class {
  std::vector<BigInt> coords;
  bool operator==(const H0Class&) const = default;
};

/// H_0 of the groupoid of the graph: Coker(Id - M^t).
AbelianGroup h0_group(const GraphRef& graph);
/// [C] = sum over the antichain of e_{t(path)}, in normal form.
H0Class h0_class(const AbelianGroup& h0, const ClopenSet& c);
H0Class h0_class(const ClopenSet& c);

struct HomWitness {
  /// images[i] = image of the i-th normal-form generator of A, in B's coordinates.
  std::vector<std::vector<BigInt>> images;
};

/// Is there phi : A -> B with phi(a) = b? Solved as one integer linear system.
std::optional<HomWitness> hom_exists(const AbelianGroup& a, const H0Class& a_elem, const AbelianGroup& b,
                                     const H0Class& b_elem);

/// An embedding of the derived subgroup of the source full group into the
/// target full group with support exactly Z exists iff some homomorphism of
/// H_0 groups sends [X_source] to [Z].
std::optional<HomWitness> embedding_support_obstruction(const GraphRef& source, const GraphRef& target,
                                                        const ClopenSet& support);

/// (m - 1) divides (n - 1). Throws InvalidArity if n < 2 or m < 2.
bool thompson_divisibility(long n, long m);

/// grid[n - 2][m - 2] = embedding_support_obstruction(Omega_n, Omega_m, whole)
/// has a witness, for 2 <= n, m <= max_arity. Cells are computed in parallel.
std::vector<std::vector<bool>> obstruction_grid(long max_arity);
/// Serial reference for obstruction_grid.
std::vector<std::vector<bool>> obstruction_grid_serial(long max_arity);

}  // namespace tfg
