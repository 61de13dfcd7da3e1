#include <jacder/error.hpp>
#include <jacder/linear_solve.hpp>

#include <utility>

namespace jacder {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && is_zero(m[pivot][col])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);

    auto& prow = m[row];
    if (prow[col] != 1) {
      const Rational inv = 1 / prow[col];
      for (std::size_t j = col; j < prow.size(); ++j) {
        if (!is_zero(prow[j])) prow[j] *= inv;
      }
    }
    // Only the nonzero tail of the pivot row participates in elimination;
    // the matrices built from polynomial maps are very sparse.
    std::vector<std::size_t> support;
    for (std::size_t j = col; j < prow.size(); ++j) {
      if (!is_zero(prow[j])) support.push_back(j);
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      factor = m[r][col];
      auto& target = m[r];
      for (std::size_t j : support) target[j] -= factor * prow[j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

LinearSolution solve_linear(const LinearSystem& sys) {
  const std::size_t rows = sys.matrix.size();
  if (sys.rhs.size() != rows) throw Error(ErrorCode::UsageError, "rhs length does not match row count");
  const std::size_t cols = rows == 0 ? 0 : sys.matrix.front().size();

  RationalMatrix aug;
  aug.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (sys.matrix[i].size() != cols) throw Error(ErrorCode::UsageError, "ragged linear system");
    RationalVector r = sys.matrix[i];
    r.push_back(sys.rhs[i]);
    aug.push_back(std::move(r));
  }

  std::vector<std::size_t> pivots = rref(aug, cols);
  // A zero row with nonzero rhs after elimination.
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    if (!is_zero(aug[i][cols])) throw Error(ErrorCode::Inconsistent, "linear system is inconsistent");
  }

  LinearSolution sol;
  sol.pivot_columns = pivots;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug[i][cols];

  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug[i][free];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t columns) {
  LinearSystem sys;
  sys.matrix = m;
  for (auto& row : sys.matrix) row.resize(columns);
  sys.rhs.assign(m.size(), Rational(0));
  if (m.empty()) {
    std::vector<RationalVector> out;
    for (std::size_t j = 0; j < columns; ++j) {
      RationalVector v(columns);
      v[j] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  return solve_linear(sys).nullspace;
}

}  // namespace jacder
