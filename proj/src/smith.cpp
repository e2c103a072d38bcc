// Smith normal form by elementary row/column operations, tracking the
// unimodular transforms. Termination of the inner loop is guaranteed because
// every pass either finishes the pivot position or strictly decreases the
// smallest nonzero absolute value in the working block.
#include "levelzero/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace levelzero {

namespace {

// Row operations act on (A, U) together so that U * m * V = A stays true:
// a left multiplication applied to A is applied to U as well.
void swap_rows(IntMatrix& a, IntMatrix& u, int r1, int r2) {
  for (int j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
  for (int j = 0; j < u.cols(); ++j) std::swap(u(r1, j), u(r2, j));
}

void swap_cols(IntMatrix& a, IntMatrix& v, int c1, int c2) {
  for (int i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
  for (int i = 0; i < v.rows(); ++i) std::swap(v(i, c1), v(i, c2));
}

// row r1 += f * row r2
void add_row(IntMatrix& a, IntMatrix& u, int r1, int r2, const Int& f) {
  for (int j = 0; j < a.cols(); ++j) a(r1, j) += f * a(r2, j);
  for (int j = 0; j < u.cols(); ++j) u(r1, j) += f * u(r2, j);
}

// col c1 += f * col c2
void add_col(IntMatrix& a, IntMatrix& v, int c1, int c2, const Int& f) {
  for (int i = 0; i < a.rows(); ++i) a(i, c1) += f * a(i, c2);
  for (int i = 0; i < v.rows(); ++i) v(i, c1) += f * v(i, c2);
}

void negate_row(IntMatrix& a, IntMatrix& u, int r) {
  for (int j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
  for (int j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
}

}  // namespace

SmithDecomposition smith_decompose(const IntMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  SmithDecomposition out;
  out.U = IntMatrix::identity(rows);
  out.V = IntMatrix::identity(cols);
  IntMatrix a = m;

  int steps = std::min(rows, cols);
  for (int s = 0; s < steps; ++s) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block, first by
      // absolute value, then by row-major position.
      int pi = -1, pj = -1;
      Int best;
      for (int i = s; i < rows; ++i)
        for (int j = s; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Int v = abs(a(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto done;  // trailing block is zero
      if (pi != s) swap_rows(a, out.U, s, pi);
      if (pj != s) swap_cols(a, out.V, s, pj);

      // Reduce the pivot column and row. Truncated division keeps
      // |remainder| < |pivot|, so leftovers shrink the pivot next pass.
      bool clean = true;
      for (int i = s + 1; i < rows; ++i) {
        if (a(i, s) == 0) continue;
        Int q = a(i, s) / a(s, s);
        if (q != 0) add_row(a, out.U, i, s, -q);
        if (a(i, s) != 0) clean = false;
      }
      for (int j = s + 1; j < cols; ++j) {
        if (a(s, j) == 0) continue;
        Int q = a(s, j) / a(s, s);
        if (q != 0) add_col(a, out.V, j, s, -q);
        if (a(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide the whole trailing block. If
      // some entry resists, mix its row into the pivot row and restart.
      int bi = -1, bj = -1;
      for (int i = s + 1; i < rows && bi < 0; ++i)
        for (int j = s + 1; j < cols; ++j)
          if (a(i, j) % a(s, s) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi >= 0) {
        add_row(a, out.U, s, bi, 1);
        continue;
      }
      break;
    }
    if (a(s, s) < 0) negate_row(a, out.U, s);
  }
done:
  out.D = a;
  return out;
}

std::vector<Int> smith_diagonal(const IntMatrix& m) {
  SmithDecomposition s = smith_decompose(m);
  int k = std::min(m.rows(), m.cols());
  std::vector<Int> d(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) d[static_cast<size_t>(i)] = s.D(i, i);
  return d;
}

bool lattice_contains(const IntMatrix& b, const IntVec& x) {
  if (b.cols() == 0) {
    for (const Int& xi : x)
      if (xi != 0) return false;
    return true;
  }
  SmithDecomposition s = smith_decompose(b);
  IntVec ux = s.U * x;
  int r = std::min(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i) {
    if (i < r && s.D(i, i) != 0) {
      if (ux[static_cast<size_t>(i)] % s.D(i, i) != 0) return false;
    } else {
      if (ux[static_cast<size_t>(i)] != 0) return false;
    }
  }
  return true;
}

}  // namespace levelzero
