#pragma once

#include <optional>
#include <vector>

#include "tfg/matrix.hpp"

namespace tfg {

/// U * M * V = S with U, V unimodular and S diagonal, its diagonal
/// d_1 | d_2 | ... nonnegative. `invariants` has min(rows, cols) entries.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  std::vector<BigInt> invariants;

  /// Number of nonzero invariant factors.
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Integer solution of A z = b, if one exists, via the Smith form of A.
std::optional<std::vector<BigInt>> solve_integer_system(const IntegerMatrix& a, const std::vector<BigInt>& b);

}  // namespace tfg
