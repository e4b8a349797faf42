#ifndef BICROSS_LINSOLVE_HPP
#define BICROSS_LINSOLVE_HPP

#include <vector>

#include "bicross/scalar.hpp"

namespace bicross {

/// Outcome of an exact dense solve of A x = b over the Gaussian rationals.
/// For underdetermined systems `values` holds the particular solution with
/// all free unknowns set to zero and `free_columns` names them; for
/// inconsistent systems `witness_row` indexes an offending input row.
struct LinearSolution {
  enum Kind { kUnique, kUnderdetermined, kInconsistent } kind = kUnique;
  std::vector<Scalar> values;
  std::vector<int> free_columns;
  int witness_row = -1;
};

/// Fraction-free-ish Gauss elimination with exact pivots; sizes here are
/// tiny (one unknown per generator), so no pivoting strategy is needed
/// beyond skipping zero pivots.
LinearSolution solve_linear(std::vector<std::vector<Scalar>> a,
                            std::vector<Scalar> b);

}  // namespace bicross

#endif
