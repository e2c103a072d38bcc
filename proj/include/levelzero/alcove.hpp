// levelzero: the base alcove of a split group, its facets, and the
// decomposition of level-0 classes into minimal coherent systems.
//
// The alcove lives in the cocharacter space Y (X) Q. Each irreducible
// component of the root system contributes a simplex cut out by its simple
// roots together with one extra wall where the highest root takes the value
// one; central directions stay free. Facets are encoded by the set of walls
// that vanish on them. Every facet carries the reflection group of the roots
// that are integral on it, and with it a label context in which local
// classes are enumerated. Classes at different facets are merged along two
// kinds of moves -- restriction to a smaller face and transport by a
// symmetry of the alcove -- and the resulting components are the minimal
// coherent systems.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "levelzero/dual_classes.hpp"
#include "levelzero/matrix.hpp"
#include "levelzero/root_datum.hpp"
#include "levelzero/weyl.hpp"

namespace levelzero {

// One wall of the alcove: the affine function <root, .> + constant.
struct AlcoveNode {
  int root_index = -1;  // index into RootDatum::roots
  Int constant;         // 1 on the extra wall of a component, 0 otherwise
  int component = -1;
  bool extra = false;
};

struct AlcoveFacet {
  std::vector<int> vanishing;    // node ids, sorted; proper per component
  int dim = 0;                   // rank minus the number of vanishing walls
  RatVec barycenter;             // a point in the relative interior
  std::vector<int> local_roots;  // roots integral on the facet
  bool vertex = false;           // facet of the smallest dimension
  bool hyperspecial = false;     // vertex whose local reflections give all of W
};

// A symmetry of the base alcove, recorded as its action on the walls
// together with the finite linear part; translation data is dropped, which
// keeps the group finite even when the lattice quotient is infinite.
struct AlcoveSymmetry {
  std::vector<int> node_perm;  // image of each node
  int linear = 0;              // Weyl index of the linear part

  bool operator==(const AlcoveSymmetry& o) const {
    return linear == o.linear && node_perm == o.node_perm;
  }
  bool operator<(const AlcoveSymmetry& o) const {
    if (linear != o.linear) return linear < o.linear;
    return node_perm < o.node_perm;
  }
};

struct AlcoveComplex {
  const RootDatum* R = nullptr;
  const WeylGroup* W = nullptr;
  std::vector<AlcoveNode> nodes;
  std::vector<std::vector<int>> components;  // node ids per component
  std::vector<RatVec> opposite_vertex;       // per node: the alcove vertex
                                             // where all other walls vanish
  std::vector<AlcoveFacet> facets;           // ordered by (size, lex) of the
                                             // vanishing sets
  std::map<std::vector<int>, int> facet_of_vanishing;
  std::vector<AlcoveSymmetry> symmetry_generators;
  std::vector<AlcoveSymmetry> symmetries;  // closure, identity included
  int chamber = 0;                         // facet with no vanishing walls

  // True when x lies in the closure of sigma (x == sigma included).
  bool is_face(int x, int sigma) const;
  // Facet reached from `facet` by applying the symmetry.
  int mapped_facet(const AlcoveSymmetry& g, int facet) const;
};

// Builds the alcove of a split datum; throws TwistedUnsupported otherwise.
AlcoveComplex build_alcove(const RootDatum& R, const WeylGroup& W);

// Label context of one facet: acting group generated by the reflections of
// the local roots, with the local roots visible.
LabelContext facet_context(const AlcoveComplex& A, int facet, const Int& q,
                           std::vector<Int> excluded_primes);

// The full level-0 decomposition at a fixed q and order bound: local classes
// at every facet, merged into minimal coherent systems, with each system
// tagged by its class under the full group and an index within that tag.
struct Decomposition {
  const RootDatum* R = nullptr;
  const WeylGroup* W = nullptr;
  Int q;
  Int bound;
  std::vector<Int> excluded;
  AlcoveComplex alcove;
  LabelContext global_ctx;
  std::vector<LabelContext> facet_ctx;
  std::vector<std::vector<ClassLabel>> facet_classes;  // sorted per facet

  // The universe of (facet, local class) pairs, sorted by facet then class.
  std::vector<std::pair<int, ClassLabel>> pairs;
  std::vector<int> system_of;             // system id per pair
  std::vector<std::vector<int>> systems;  // sorted pair ids per system,
                                          // ordered by first pair
  std::vector<ClassLabel> system_global;  // class under the full group
  std::vector<int> system_alpha;  // position within the systems sharing a
                                  // global class; 0 marks the system through
                                  // the base vertex
  int base_vertex = -1;           // facet id of the chosen hyperspecial vertex
  ClassEnumeration global_enum;

  int pair_id(int facet, const ClassLabel& c) const;  // -1 when absent

  // Class of c at a face x of sigma; throws NotAFace when x is not one.
  ClassLabel restricted(int sigma, const ClassLabel& c, int x) const;

  // Image of (sigma, c) under an alcove symmetry.
  std::pair<int, ClassLabel> transported(const AlcoveSymmetry& g, int sigma,
                                         const ClassLabel& c) const;

  // Class of c under the full group.
  ClassLabel globalized(const ClassLabel& c) const;

  // Union of the systems meeting the seed; sorted pair ids.
  std::vector<int> closure(std::vector<int> seed) const;

  // Independent re-check that a pair set is closed under restriction
  // preimages and alcove symmetries (no union-find involved).
  bool is_coherent(const std::vector<int>& pair_set) const;
};

// base_vertex = -1 picks the vertex at the origin; an explicit value must
// name a hyperspecial vertex facet, else BadVertex.
Decomposition decompose(const RootDatum& R, const WeylGroup& W, const Int& q,
                        const Int& bound, std::vector<Int> excluded_primes,
                        int base_vertex = -1);

}  // namespace levelzero
