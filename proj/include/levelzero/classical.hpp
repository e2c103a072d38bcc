// levelzero: signed-permutation bookkeeping for the classical families. The
// Weyl groups of the symplectic and orthogonal data built here consist of
// monomial +-1 matrices, so a class label carries a sign vector, and the
// parity of those signs over the order-2 torus coordinates is constant on
// rational classes. That parity tags the two rational classes sitting over
// a geometric class whose dual centralizer is disconnected, it adds up under
// products of commuting factors, and together with the vertex factor table
// and the cuspidal-existence predicate it gives quick independent checks of
// the alcove decomposition.
#pragma once

#include <utility>
#include <vector>

#include "levelzero/dual_classes.hpp"
#include "levelzero/matrix.hpp"
#include "levelzero/numeric.hpp"
#include "levelzero/qmodz.hpp"
#include "levelzero/root_datum.hpp"
#include "levelzero/weyl.hpp"

namespace levelzero {

// A monomial +-1 matrix: basis vector j maps to +-e_{perm[j]}, and the sign
// is recorded by target coordinate, signs[i] = 1 exactly when row i carries
// the entry -1. Elements of the even orthogonal Weyl groups have an even
// number of sign flips; the conversion itself accepts any monomial matrix,
// since twisted data multiply elements into the odd-flip coset.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;

  int rank() const { return static_cast<int>(perm.size()); }
  bool operator==(const SignedPermutation& o) const = default;
};

// Decomposes a monomial +-1 matrix; throws UnsupportedSpec for anything else.
SignedPermutation signed_permutation_of(const IntMatrix& m);
IntMatrix matrix_of(const SignedPermutation& w);

// Per-coordinate pattern of s: +1 where the coordinate is 0 mod 1, -1 where
// it is 1/2 mod 1, 0 elsewhere.
std::vector<int> half_pattern(const QmodZVector& s);

// Parity of the sign flips of w over the coordinates with pattern entry -1.
int parity_f(const std::vector<int>& pattern, const SignedPermutation& w);

// 0/1 tag of a rational class in a classical family. The tag is 0 whenever
// the centralizer of the dual torus point is connected, which makes the
// rational class the only one over its geometric class; otherwise exactly
// two rational classes share the geometric class and the tag is the sign
// parity of the twisted Frobenius element over the order-2 coordinates.
// Throws UnsupportedSpec for families without the signed model.
int rational_tag(Family f, const RootDatum& R, const WeylGroup& W,
                 const ClassLabel& label);

// Tag of a class assembled from two commuting factors: the parities add.
int compose_tags(int i, int j);

// Classical factors of the reductive quotient at vertex k of the standard
// alcove: ranks k and n - k, with the family of each factor read off the
// table row. A rank-0 entry stands for a trivial factor. Throws BadVertex
// when k is outside 0..n and UnsupportedSpec for families without the table.
std::pair<std::pair<Family, int>, std::pair<Family, int>> parahoric_factors(
    Family f, int n, int vertex);

enum class OrthForm { split, nonsplit };

// Whether an orthogonal group of dimension N in the given form has a
// cuspidal unipotent representation: N = 2 m^2 for an integer m that is
// even exactly in the split form.
bool unip_cuspidal_exists(long N, OrthForm form);

}  // namespace levelzero
