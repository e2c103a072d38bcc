// levelzero: semisimple parameter classes on the dual side. A class is a
// pair (s, w): a torus point s in (Q/Z)^rank fixed by the twisted
// q-multiplication s = w(theta(q s)), together with the coset of w modulo
// the reflection subgroup attached to s. Classes are kept in a canonical
// form so that equality is literal comparison; every operation here is
// relative to a context that fixes the acting group, the visible roots, the
// twist, and the arithmetic (q and the excluded primes).
#pragma once

#include <map>
#include <vector>

#include "levelzero/qmodz.hpp"
#include "levelzero/root_datum.hpp"
#include "levelzero/weyl.hpp"

namespace levelzero {

struct LabelContext {
  const RootDatum* R = nullptr;
  const WeylGroup* W = nullptr;
  Subgroup acting;                // subgroup the classes live in
  std::vector<int> root_subset;   // visible roots (indices into R->roots)
  IntMatrix theta;                // twist entering the Frobenius
  Int q;
  std::vector<Int> excluded_primes;  // p, plus ell in the integral regime
};

// Context for the full group: acting = whole Weyl group, all roots visible,
// twist = the datum's pinned automorphism.
LabelContext make_global_context(const RootDatum& R, const WeylGroup& W,
                                 const Int& q,
                                 std::vector<Int> excluded_primes);

struct ClassLabel {
  QmodZVector s;  // canonical coordinate
  int wbar = 0;   // canonical coset representative, index into W.elements

  bool operator==(const ClassLabel& o) const {
    return wbar == o.wbar && s == o.s;
  }
  bool operator<(const ClassLabel& o) const {
    if (!(s == o.s)) return s < o.s;
    return wbar < o.wbar;
  }
};

// q * w * theta acting on X: the twisted Frobenius on torus coordinates.
IntMatrix frobenius_matrix(const LabelContext& ctx, int w);

// All s with s = w(theta(q s)): the kernel of (frobenius - 1) on (Q/Z)^n,
// enumerated deterministically; throws TooLarge past the cap.
std::vector<QmodZVector> torus_fixed_points(const LabelContext& ctx, int w);

// Reusable cache of reflection subgroups keyed by the torus point.
struct StabilizerCache {
  std::map<QmodZVector, Subgroup> connected;
};

// Reflection subgroup of the visible roots pairing integrally with s.
const Subgroup& connected_stabilizer_cached(const LabelContext& ctx,
                                            const QmodZVector& s,
                                            StabilizerCache& cache);

// Canonical form of the class of (s, w) under the acting group: minimize
// (v s, minimal coset representative of v w theta(v)^-1) lexicographically.
ClassLabel canonicalize(const LabelContext& ctx, const QmodZVector& s, int w,
                        StabilizerCache* cache = nullptr);

// Same, but first checks the defining equation s = w(theta(q s)) and throws
// IncompatiblePair when it fails.
ClassLabel canonical_inertial_form(const LabelContext& ctx,
                                   const QmodZVector& s, int w,
                                   StabilizerCache* cache = nullptr);

// Lexicographically minimal orbit representative of s alone.
QmodZVector geometric_class(const LabelContext& ctx, const QmodZVector& s);

struct ClassEnumeration {
  std::vector<ClassLabel> labels;         // sorted canonical labels
  std::vector<QmodZVector> geometric;     // sorted orbit representatives
  std::vector<int> geometric_of_label;    // labels[i] lies over geometric[..]
};

// All classes whose torus point has order dividing N (and coprime to the
// excluded primes). Throws BoundTooLarge for a bad N.
ClassEnumeration rational_classes(const LabelContext& ctx, const Int& N);

// Duality between torus characters and torus points: theta_char is a vector
// representing a class of X modulo (frobenius - 1) X.
QmodZVector theta_to_s(const LabelContext& ctx, int w, const IntVec& theta_char);
IntVec s_to_theta(const LabelContext& ctx, int w, const QmodZVector& s);
// Equality of character classes modulo (frobenius - 1) X.
bool theta_chars_equal(const LabelContext& ctx, int w, const IntVec& x,
                       const IntVec& y);

// Norm-style transfer of a character class along an unramified extension of
// degree m: x modulo (F-1) maps to (1 + F + ... + F^{m-1}) x modulo (F^m-1).
IntVec trace_map(const LabelContext& ctx, int w, const IntVec& x, int m);

// Prime-to-ell part of the torus coordinate, same twist, recanonicalized.
ClassLabel ell_regular_part(const LabelContext& ctx, const ClassLabel& label,
                            const Int& ell);

// Elliptic test: the twisted fixed space on the quotient by the reflection
// roots of s has the same dimension as the plain twisted fixed space on the
// quotient by all visible roots (both on the cocharacter side).
bool is_elliptic(const LabelContext& ctx, const ClassLabel& label);

}  // namespace levelzero
