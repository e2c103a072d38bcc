// levelzero: root data for the supported reductive families, in standard
// coordinates, together with a pinned lattice automorphism (the twist).
// Duality swaps characters with cocharacters; Levi subdata keep the ambient
// lattice and restrict the root list.
#pragma once

#include <string>
#include <vector>

#include "levelzero/matrix.hpp"

namespace levelzero {

enum class Family {
  GL,
  SL,
  PGL,
  Sp,
  SOodd,
  SOeven_split,
  SOeven_quasisplit,
  U_quasisplit,
};

const char* family_name(Family f);
// Parse a family name such as "Sp" or "SOeven_quasisplit"; throws
// UnsupportedSpec for unknown names.
Family parse_family(const std::string& name);

struct RootDatum {
  std::string name;
  int rank = 0;                  // rank of the character lattice X
  std::vector<IntVec> roots;     // all roots, coordinates in X
  std::vector<IntVec> coroots;   // parallel list, coordinates in Y
  std::vector<int> simples;      // indices into roots
  IntMatrix theta;               // pinned automorphism acting on X
  int theta_order = 1;

  bool theta_is_identity() const;
  // Contragredient action of theta on the cocharacter lattice Y.
  IntMatrix theta_on_Y() const;
  int find_root(const IntVec& alpha) const;  // -1 if absent
};

// Standard-coordinate datum for a family member; throws UnsupportedSpec for
// out-of-range n.
RootDatum build_group(Family f, int n);

// Swap (X, roots) with (Y, coroots); the twist becomes its contragredient.
RootDatum dual(const RootDatum& R);

struct LeviDatum {
  RootDatum datum;                       // same lattice, fewer roots
  std::vector<int> root_index_in_parent; // levi root i = parent root [..i..]
  std::vector<int> simple_positions;     // the chosen parent simple slots
};

// Levi subdatum generated by a subset of the simple roots (positions into
// R.simples). With a nontrivial twist the subset must be stable under it.
LeviDatum levi(const RootDatum& R, const std::vector<int>& simple_positions);

// Structural sanity of a datum: pairings, reflection closure, twist
// compatibility. Throws UnsupportedSpec on violation.
void validate(const RootDatum& R);

// Order of a finite-order lattice automorphism; throws UnsupportedSpec if
// the order exceeds the search cap (the matrix is then not finite order for
// any practical purpose).
int automorphism_order(const IntMatrix& m);

}  // namespace levelzero
