#pragma once

#include <jacder/rational.hpp>

#include <cstddef>
#include <vector>

namespace jacder {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

struct LinearSystem {
  RationalMatrix matrix;  // rows of equal length
  RationalVector rhs;     // one entry per row
};

struct LinearSolution {
  RationalVector particular;          // free variables set to zero
  std::vector<RationalVector> nullspace;  // one vector per free column
  std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form in place. Pivots are chosen as the first row with
// a nonzero entry in each column, scanning columns left to right, so the
// result is deterministic. Returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t columns);

// Exact Gauss-Jordan solve. Each nullspace vector has a 1 in its free column
// and 0 in every other free column. Throws Error(Inconsistent) when the affine
// system has no solution.
LinearSolution solve_linear(const LinearSystem& sys);

// Nullspace basis of a homogeneous system with the given column count.
std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t columns);

}  // namespace jacder
