// levelzero: Smith normal form over Z, with unimodular transforms recorded.
// The pivot rule (smallest absolute value, ties broken by position) is part
// of the module's contract: downstream group presentations and generator
// lifts must be reproducible bit-for-bit across runs and platforms.
#pragma once

#include <vector>

#include "levelzero/matrix.hpp"

namespace levelzero {

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, |det| = 1
  IntMatrix D;  // rows x cols, diagonal, d1 | d2 | ..., all >= 0
  IntMatrix V;  // cols x cols, |det| = 1
};

// Decompose m as U * m * V = D. Deterministic: pivots are chosen with
// smallest absolute value, ties broken by (row, column) position.
SmithDecomposition smith_decompose(const IntMatrix& m);

// Diagonal of the Smith form (length min(rows, cols)).
std::vector<Int> smith_diagonal(const IntMatrix& m);

// Does x lie in the integer column span of b?
bool lattice_contains(const IntMatrix& b, const IntVec& x);

}  // namespace levelzero
