// levelzero: signed-permutation tags and classical lookup tables. The only
// arithmetic here is sign bookkeeping: conversions between monomial matrices
// and (permutation, sign-vector) pairs, the parity of the signs over the
// order-2 torus coordinates, and two closed-form tables.
#include "levelzero/classical.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

#include "levelzero/errors.hpp"

namespace levelzero {

SignedPermutation signed_permutation_of(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw UnsupportedSpec("signed_permutation_of: matrix is not square");
  int n = m.rows();
  SignedPermutation w;
  w.perm.assign(n, -1);
  w.signs.assign(n, 0);
  std::vector<char> hit(n, 0);
  for (int j = 0; j < n; ++j) {
    int row = -1;
    for (int i = 0; i < n; ++i) {
      if (m(i, j) == 0) continue;
      if (row >= 0 || (m(i, j) != 1 && m(i, j) != -1))
        throw UnsupportedSpec(
            "signed_permutation_of: matrix is not a signed permutation");
      row = i;
    }
    if (row < 0 || hit[row])
      throw UnsupportedSpec(
          "signed_permutation_of: matrix is not a signed permutation");
    hit[row] = 1;
    w.perm[j] = row;
    if (m(row, j) < 0) w.signs[row] = 1;
  }
  return w;
}

IntMatrix matrix_of(const SignedPermutation& w) {
  int n = w.rank();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    assert(w.perm[j] >= 0 && w.perm[j] < n);
    m(w.perm[j], j) = w.signs[w.perm[j]] ? Int(-1) : Int(1);
  }
  return m;
}

std::vector<int> half_pattern(const QmodZVector& s) {
  std::vector<int> pattern;
  pattern.reserve(s.coords().size());
  for (const Rat& r : s.coords()) {
    if (r == 0)
      pattern.push_back(1);
    else if (r.get_den() == 2)
      pattern.push_back(-1);
    else
      pattern.push_back(0);
  }
  return pattern;
}

int parity_f(const std::vector<int>& pattern, const SignedPermutation& w) {
  assert(static_cast<int>(pattern.size()) == w.rank());
  int sum = 0;
  for (int i = 0; i < w.rank(); ++i)
    if (pattern[i] == -1) sum += w.signs[i];
  return sum & 1;
}

int rational_tag(Family f, const RootDatum& R, const WeylGroup& W,
                 const ClassLabel& label) {
  std::vector<int> pattern = half_pattern(label.s);
  int zeros = 0, halves = 0;
  for (int e : pattern) {
    if (e == 1) ++zeros;
    if (e == -1) ++halves;
  }
  // Two rational classes share the geometric class exactly when the dual
  // centralizer is a disconnected orthogonal one: both +1 and -1 must occur
  // as eigenvalues of the dual torus point. Odd orthogonal duals always have
  // the eigenvalue +1; symplectic duals have connected centralizers, so the
  // odd orthogonal family never splits.
  bool split_pair = false;
  switch (f) {
    case Family::Sp:
      split_pair = halves > 0;
      break;
    case Family::SOeven_split:
    case Family::SOeven_quasisplit:
      split_pair = zeros > 0 && halves > 0;
      break;
    case Family::SOodd:
      split_pair = false;
      break;
    default:
      throw UnsupportedSpec("rational_tag: family has no signed model");
  }
  if (!split_pair) return 0;
  IntMatrix frob = W.elements[label.wbar] * R.theta;
  return parity_f(pattern, signed_permutation_of(frob));
}

int compose_tags(int i, int j) { return (i + j) & 1; }

std::pair<std::pair<Family, int>, std::pair<Family, int>> parahoric_factors(
    Family f, int n, int vertex) {
  if (n < 0) throw UnsupportedSpec("parahoric_factors: negative rank");
  if (vertex < 0 || vertex > n)
    throw BadVertex("parahoric_factors: vertex index outside 0..n");
  int k = vertex;
  int r = n - vertex;
  switch (f) {
    case Family::Sp:
      return {{Family::Sp, k}, {Family::Sp, r}};
    case Family::SOodd:
      return {{Family::SOeven_split, k}, {Family::SOodd, r}};
    case Family::SOeven_split:
      return {{Family::SOeven_split, k}, {Family::SOeven_split, r}};
    case Family::SOeven_quasisplit:
      return {{Family::SOeven_split, k}, {Family::SOeven_quasisplit, r}};
    default:
      throw UnsupportedSpec("parahoric_factors: family has no vertex table");
  }
}

bool unip_cuspidal_exists(long N, OrthForm form) {
  if (N < 0 || N % 2 != 0) return false;
  long half = N / 2;
  long m = std::lround(std::sqrt(static_cast<double>(half)));
  while (m > 0 && m * m > half) --m;
  while ((m + 1) * (m + 1) <= half) ++m;
  if (m * m != half) return false;
  return (m % 2 == 0) == (form == OrthForm::split);
}

}  // namespace levelzero
