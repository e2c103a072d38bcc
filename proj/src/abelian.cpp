// Finite abelian quotients of lattices. Presentation: ambient Z^n modulo the
// column span of a relation matrix R. With U R V = D in Smith form, the map
// x -> Ux identifies the quotient with (+) Z/d_i (+) Z^{free}; torsion
// generators lift through the columns of U^{-1}, coordinates read off
// through the corresponding rows of U, and freeness is detected on the rows
// of U with d_i = 0.
#include "levelzero/abelian.hpp"

#include <algorithm>
#include <cassert>

#include "levelzero/errors.hpp"

namespace levelzero {

namespace {
constexpr long kEnumerationCap = 1000000;
}

FiniteAbelianGroup FiniteAbelianGroup::from_relations(
    int ambient_rank, const IntMatrix& relations) {
  assert(relations.rows() == ambient_rank);
  SmithDecomposition s = smith_decompose(relations);
  IntMatrix uinv = inverse_unimodular(s.U);

  FiniteAbelianGroup g;
  g.ambient_rank_ = ambient_rank;
  int diag = std::min(relations.rows(), relations.cols());
  std::vector<int> torsion_idx, free_idx;
  for (int i = 0; i < ambient_rank; ++i) {
    Int d = (i < diag) ? s.D(i, i) : Int(0);
    if (d == 0)
      free_idx.push_back(i);
    else if (d >= 2)
      torsion_idx.push_back(i);
  }
  int k = static_cast<int>(torsion_idx.size());
  int f = static_cast<int>(free_idx.size());
  g.invariant_factors_.reserve(static_cast<size_t>(k));
  for (int i : torsion_idx) g.invariant_factors_.push_back(s.D(i, i));
  g.basis_lift_ = IntMatrix(ambient_rank, k);
  g.coord_rows_ = IntMatrix(k, ambient_rank);
  g.free_rows_ = IntMatrix(f, ambient_rank);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < ambient_rank; ++i) {
      g.basis_lift_(i, j) = uinv(i, torsion_idx[static_cast<size_t>(j)]);
      g.coord_rows_(j, i) = s.U(torsion_idx[static_cast<size_t>(j)], i);
    }
  for (int j = 0; j < f; ++j)
    for (int i = 0; i < ambient_rank; ++i)
      g.free_rows_(j, i) = s.U(free_idx[static_cast<size_t>(j)], i);
  return g;
}

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (const Int& d : invariant_factors_) o *= d;
  return o;
}

IntVec FiniteAbelianGroup::generator_lift(int j) const {
  IntVec v(static_cast<size_t>(ambient_rank_));
  for (int i = 0; i < ambient_rank_; ++i) v[static_cast<size_t>(i)] =
      basis_lift_(i, j);
  return v;
}

bool FiniteAbelianGroup::class_is_torsion(const IntVec& x) const {
  assert(static_cast<int>(x.size()) == ambient_rank_);
  if (free_rows_.rows() == 0) return true;
  IntVec fx = free_rows_ * x;
  for (const Int& v : fx)
    if (v != 0) return false;
  return true;
}

std::vector<Int> FiniteAbelianGroup::coords_of(const IntVec& x) const {
  assert(class_is_torsion(x));
  IntVec c = coord_rows_ * x;
  std::vector<Int> out(c.size());
  for (size_t i = 0; i < c.size(); ++i)
    out[i] = mod_floor(c[i], invariant_factors_[i]);
  return out;
}

std::vector<Int> FiniteAbelianGroup::reduce(std::vector<Int> coords) const {
  assert(coords.size() == invariant_factors_.size());
  for (size_t i = 0; i < coords.size(); ++i)
    coords[i] = mod_floor(coords[i], invariant_factors_[i]);
  return coords;
}

std::vector<Int> FiniteAbelianGroup::add(const std::vector<Int>& a,
                                         const std::vector<Int>& b) const {
  std::vector<Int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return reduce(std::move(c));
}

std::vector<std::vector<Int>> FiniteAbelianGroup::elements() const {
  if (order() > kEnumerationCap)
    throw TooLarge("abelian group enumeration exceeds the element cap");
  std::vector<std::vector<Int>> out;
  out.push_back(std::vector<Int>(invariant_factors_.size(), Int(0)));
  size_t k = invariant_factors_.size();
  if (k == 0) return out;
  for (;;) {
    std::vector<Int> next = out.back();
    size_t i = k;
    while (i > 0) {
      --i;
      next[i] += 1;
      if (next[i] < invariant_factors_[i]) break;
      next[i] = 0;
      if (i == 0) return out;
    }
    out.push_back(std::move(next));
  }
}

FiniteAbelianGroup cokernel_group(const IntMatrix& m) {
  if (m.rows() != m.cols() || det(m) == 0)
    throw SingularMatrix("cokernel_group requires a square nonsingular matrix");
  return FiniteAbelianGroup::from_relations(m.rows(), m);
}

FiniteAbelianGroup torsion_quotient(int ambient_rank,
                                    const std::vector<IntVec>& sublattice,
                                    const IntMatrix& endo) {
  assert(endo.rows() == ambient_rank && endo.cols() == ambient_rank);
  IntMatrix b = columns_matrix(ambient_rank, sublattice);
  for (const IntVec& v : sublattice) {
    if (!lattice_contains(b, endo * v))
      throw NotStable(
          "torsion_quotient: endomorphism does not stabilize the sublattice");
  }
  IntMatrix one_minus = IntMatrix::identity(ambient_rank) - endo;
  return FiniteAbelianGroup::from_relations(ambient_rank,
                                            hconcat(b, one_minus));
}

}  // namespace levelzero
