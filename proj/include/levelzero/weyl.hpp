// levelzero: finite Weyl groups as explicit matrix groups on the character
// lattice, enumerated breadth-first from the simple reflections. The BFS
// index doubles as the canonical order: indices sort by length first, then
// by discovery, and every "minimal representative" below means the smallest
// index. Subgroups are sorted index sets; all operations are deterministic.
#pragma once

#include <map>
#include <vector>

#include "levelzero/matrix.hpp"
#include "levelzero/qmodz.hpp"
#include "levelzero/root_datum.hpp"

namespace levelzero {

struct WeylGroup {
  std::vector<IntMatrix> elements;    // BFS order; [0] = identity
  std::map<IntMatrix, int> index_of;  // inverse of `elements`
  std::vector<int> length;            // Coxeter length = BFS depth
  std::vector<int> inverse;           // index of the inverse element
  std::vector<int> simple_refl;       // indices of the simple reflections
  std::vector<int> refl_of_root;      // reflection index per root

  int size() const { return static_cast<int>(elements.size()); }
  int index(const IntMatrix& m) const;  // -1 if absent
  int mul(int a, int b) const;          // index of elements[a] * elements[b]
  // Action on the cocharacter lattice: transpose of the inverse.
  IntMatrix on_Y(int a) const;
};

// Reflection matrix of root r acting on X: x |-> x - <x, r^> r.
IntMatrix reflection_matrix(const RootDatum& R, int root_index);

// Enumerate the Weyl group; throws TooLarge past the element cap.
WeylGroup build_weyl(const RootDatum& R);

// A subgroup given by its sorted element-index set plus generators.
struct Subgroup {
  std::vector<int> elems;  // sorted
  std::vector<int> gens;
  bool contains(int idx) const;
  int size() const { return static_cast<int>(elems.size()); }
};

Subgroup full_subgroup(const WeylGroup& W);
Subgroup subgroup_generated(const WeylGroup& W, std::vector<int> gens);

// Elements of `within` fixing s under the X-action.
Subgroup stabilizer(const WeylGroup& W, const Subgroup& within,
                    const QmodZVector& s);

// Subgroup generated by the reflections of the listed roots whose coroots
// pair integrally with s.
Subgroup connected_stabilizer(const WeylGroup& W, const RootDatum& R,
                              const std::vector<int>& root_subset,
                              const QmodZVector& s);

// Smallest index in the right coset H * w (H acting on the left).
int coset_min_rep(const WeylGroup& W, const Subgroup& H, int w);

// Canonical (minimal) representatives of all cosets H \ V, ascending.
std::vector<int> coset_reps(const WeylGroup& W, const Subgroup& H,
                            const Subgroup& V);

// Orbits of w |-> v w (theta v theta^-1)^-1 over v in W ("twisted classes");
// each orbit is sorted, orbits ordered by smallest member.
std::vector<std::vector<int>> twisted_classes(const WeylGroup& W,
                                              const IntMatrix& theta);

}  // namespace levelzero
