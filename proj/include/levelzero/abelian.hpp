// levelzero: finite abelian groups presented as lattice quotients. A group
// is stored in invariant-factor form together with lifts of its generators
// to the ambient lattice and the linear data needed to compute coordinates
// of arbitrary (torsion) ambient classes. Everything stays exact and
// deterministic: generators come from the recorded Smith transform.
#pragma once

#include <vector>

#include "levelzero/matrix.hpp"
#include "levelzero/smith.hpp"

namespace levelzero {

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : ambient_rank_(0) {}

  // Build from the Smith data of a relation matrix R (ambient Z^n modulo the
  // integer column span of R): the torsion part of that quotient.
  static FiniteAbelianGroup from_relations(int ambient_rank,
                                           const IntMatrix& relations);

  int ambient_rank() const { return ambient_rank_; }
  int num_generators() const {
    return static_cast<int>(invariant_factors_.size());
  }
  const std::vector<Int>& invariant_factors() const {
    return invariant_factors_;
  }
  bool is_trivial() const { return invariant_factors_.empty(); }
  Int order() const;

  // Lift of generator j to the ambient lattice.
  IntVec generator_lift(int j) const;

  // True if the class of x in the quotient lies in the torsion part.
  bool class_is_torsion(const IntVec& x) const;

  // Coordinates of the class of x with respect to the generators; x must be
  // a torsion class (checked).
  std::vector<Int> coords_of(const IntVec& x) const;

  // Normalize coordinates into [0, d_i).
  std::vector<Int> reduce(std::vector<Int> coords) const;

  std::vector<Int> add(const std::vector<Int>& a,
                       const std::vector<Int>& b) const;

  // All elements in deterministic mixed-radix order (last coordinate
  // fastest); throws TooLarge beyond the enumeration cap.
  std::vector<std::vector<Int>> elements() const;

 private:
  int ambient_rank_;
  std::vector<Int> invariant_factors_;  // d_1 | d_2 | ..., each >= 2
  IntMatrix basis_lift_;                // ambient_rank x k
  IntMatrix coord_rows_;                // k x ambient_rank
  IntMatrix free_rows_;                 // f x ambient_rank
};

// Z^n / m Z^n for a square nonsingular m; throws SingularMatrix otherwise.
FiniteAbelianGroup cokernel_group(const IntMatrix& m);

// Torsion part of (Z^n / sublattice) / (1 - endo). The endomorphism must
// stabilize the sublattice (NotStable otherwise).
FiniteAbelianGroup torsion_quotient(int ambient_rank,
                                    const std::vector<IntVec>& sublattice,
                                    const IntMatrix& endo);

}  // namespace levelzero
