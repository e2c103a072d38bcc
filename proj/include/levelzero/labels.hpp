// levelzero: finite invariants attached to a class label. Each label (s, w)
// carries two torsion quotients of the cocharacter lattice: one relative to
// the roots integral on s and the twisted action of w, one for the full
// group. The identity of Y induces a map h between them; the size of its
// kernel, counted up to the action of the stabilizer's component group,
// predicts how many minimal coherent systems share the label, and the
// nonempty fibers mark the relevant central characters.
#pragma once

#include <vector>

#include "levelzero/abelian.hpp"
#include "levelzero/dual_classes.hpp"
#include "levelzero/root_datum.hpp"
#include "levelzero/weyl.hpp"

namespace levelzero {

// Torsion of Y / (coroot lattice + (1 - theta) Y): the obstruction group of
// the full datum.
FiniteAbelianGroup kottwitz_group(const RootDatum& R);

// Component group of the stabilizer of s inside the acting subgroup:
// the full stabilizer modulo the reflection subgroup of the roots integral
// on s, with deterministic minimal coset representatives.
struct ComponentGroup {
  Subgroup full;                   // elements of ctx.acting fixing s
  Subgroup connected;              // reflections of the s-integral roots
  std::vector<int> coset_reps;     // sorted minimal representatives
  std::vector<int> twisted_fixed;  // reps whose coset commutes with w*theta
};

ComponentGroup component_group(const LabelContext& ctx, const ClassLabel& c);

struct ClassInvariants {
  FiniteAbelianGroup domain;  // torsion of Y / (integral coroots, 1 - w*theta)
  FiniteAbelianGroup target;  // the group of the full datum
  ComponentGroup pi0;
  std::vector<std::vector<Int>> kernel;  // domain coordinates killed by h
  Int kernel_orbits;                     // kernel classes up to pi0^fixed
  std::vector<std::vector<Int>> target_elements;  // enumeration order
  std::vector<Int> fiber_sizes;                   // aligned with the above
};

// Computes the invariants of a canonical label in its context. The domain
// uses only the roots visible in the context; the target always belongs to
// the full datum.
ClassInvariants class_invariants(const LabelContext& ctx, const ClassLabel& c);

// Does any domain class hit these target coordinates?
bool is_relevant(const ClassInvariants& inv, const std::vector<Int>& coords);

// Root indices (within the context's visible subset) of the centralizer of
// the split part cut out by the label: roots vanishing on the common kernel
// of the s-integral roots and of w*theta - 1 on the cocharacter space.
std::vector<int> parameter_levi_roots(const LabelContext& ctx,
                                      const ClassLabel& c);

// Label context of a standard Levi subdatum, acting inside the parent Weyl
// group with the Levi's roots visible.
LabelContext levi_label_context(const RootDatum& R, const WeylGroup& W,
                                const LeviDatum& L, const Int& q,
                                std::vector<Int> excluded_primes);

}  // namespace levelzero
