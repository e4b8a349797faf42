#include "bicross/linsolve.hpp"

#include <cassert>

namespace bicross {

LinearSolution solve_linear(std::vector<std::vector<Scalar>> a,
                            std::vector<Scalar> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  assert(b.size() == rows);

  std::vector<int> pivot_of_col(cols, -1);
  std::vector<int> row_order;  // original index of each used row
  row_order.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) row_order.push_back((int)r);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    std::swap(b[p], b[rank]);
    std::swap(row_order[p], row_order[rank]);
    Scalar inv = a[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      Scalar f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
      b[r] -= f * b[rank];
    }
    pivot_of_col[c] = (int)rank;
    ++rank;
  }

  LinearSolution out;
  for (std::size_t r = rank; r < rows; ++r) {
    if (!b[r].is_zero()) {
      out.kind = LinearSolution::kInconsistent;
      out.witness_row = row_order[r];
      return out;
    }
  }
  out.values.assign(cols, Scalar());
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0)
      out.values[c] = b[pivot_of_col[c]];
    else
      out.free_columns.push_back((int)c);
  }
  out.kind = out.free_columns.empty() ? LinearSolution::kUnique
                                      : LinearSolution::kUnderdetermined;
  return out;
}

}  // namespace bicross
