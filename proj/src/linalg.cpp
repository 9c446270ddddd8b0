#include "jacobson/linalg.hpp"

#include <cstddef>
#include <utility>

namespace jacobson {

std::optional<std::vector<Scalar>> solve_dense(std::vector<std::vector<Scalar>> rows,
                                               std::vector<Scalar> rhs,
                                               const FieldSpec& field) {
  const std::size_t m = rows.size();
  const std::size_t cols = m == 0 ? 0 : rows[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    const Scalar inv = rows[rank][col].inverse();
    for (std::size_t t = col; t < cols; ++t) rows[rank][t] = rows[rank][t] * inv;
    rhs[rank] = rhs[rank] * inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t t = col; t < cols; ++t) rows[r][t] = rows[r][t] - factor * rows[rank][t];
      rhs[r] = rhs[r] - factor * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r) {
    if (!rhs[r].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(cols, Scalar::zero(field));
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
  return x;
}

}  // namespace jacobson
