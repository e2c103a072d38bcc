#include "levelzero/dual_classes.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "levelzero/abelian.hpp"
#include "levelzero/errors.hpp"
#include "levelzero/smith.hpp"
#include "levelzero/util.hpp"

namespace levelzero {

namespace {
constexpr long kEnumerationCap = 1000000;
}

LabelContext make_global_context(const RootDatum& R, const WeylGroup& W,
                                 const Int& q,
                                 std::vector<Int> excluded_primes) {
  LabelContext ctx;
  ctx.R = &R;
  ctx.W = &W;
  ctx.acting = full_subgroup(W);
  for (size_t r = 0; r < R.roots.size(); ++r)
    ctx.root_subset.push_back(static_cast<int>(r));
  ctx.theta = R.theta;
  ctx.q = q;
  ctx.excluded_primes = std::move(excluded_primes);
  return ctx;
}

IntMatrix frobenius_matrix(const LabelContext& ctx, int w) {
  return ctx.q * (ctx.W->elements[static_cast<size_t>(w)] * ctx.theta);
}

std::vector<QmodZVector> torus_fixed_points(const LabelContext& ctx, int w) {
  int n = ctx.R->rank;
  IntMatrix m = frobenius_matrix(ctx, w) - IntMatrix::identity(n);
  Int count = abs(det(m));
  if (count == 0)
    throw SingularMatrix("torus_fixed_points: fixed-point group is infinite");
  if (count > kEnumerationCap)
    throw TooLarge("torus_fixed_points: enumeration exceeds the cap");

  // Solutions of m s = 0 mod 1: with U m V = D, s = V (t_i / d_i) runs over
  // all solutions as t ranges over the residue box of D.
  SmithDecomposition sd = smith_decompose(m);
  std::vector<Int> d(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = sd.D(i, i);
  std::vector<QmodZVector> out;
  out.reserve(count.get_ui());
  std::vector<Int> t(static_cast<size_t>(n), Int(0));
  for (;;) {
    RatVec coords(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i) {
      if (t[static_cast<size_t>(i)] == 0) continue;
      Rat f(t[static_cast<size_t>(i)], d[static_cast<size_t>(i)]);
      f.canonicalize();
      for (int r = 0; r < n; ++r) coords[static_cast<size_t>(r)] +=
          Rat(sd.V(r, i)) * f;
    }
    out.push_back(QmodZVector(std::move(coords)));
    int i = n;
    bool done = true;
    while (i > 0) {
      --i;
      t[static_cast<size_t>(i)] += 1;
      if (t[static_cast<size_t>(i)] < d[static_cast<size_t>(i)]) {
        done = false;
        break;
      }
      t[static_cast<size_t>(i)] = 0;
    }
    if (done || n == 0) break;
  }
  return out;
}

const Subgroup& connected_stabilizer_cached(const LabelContext& ctx,
                                            const QmodZVector& s,
                                            StabilizerCache& cache) {
  auto it = cache.connected.find(s);
  if (it != cache.connected.end()) return it->second;
  Subgroup sub = connected_stabilizer(*ctx.W, *ctx.R, ctx.root_subset, s);
  return cache.connected.emplace(s, std::move(sub)).first->second;
}

namespace {

// Index of theta * v * theta^-1; the twist normalizes the acting group in
// every supported configuration.
int twist_conj(const LabelContext& ctx, const IntMatrix& theta_inv, int v) {
  if (ctx.theta == IntMatrix::identity(ctx.R->rank)) return v;
  int t = ctx.W->index(ctx.theta * ctx.W->elements[static_cast<size_t>(v)] *
                       theta_inv);
  if (t < 0)
    throw UnsupportedSpec("twist does not normalize the acting group");
  return t;
}

}  // namespace

ClassLabel canonicalize(const LabelContext& ctx, const QmodZVector& s, int w,
                        StabilizerCache* cache) {
  StabilizerCache local;
  StabilizerCache& cc = cache ? *cache : local;
  IntMatrix theta_inv =
      ctx.R->rank ? inverse_unimodular(ctx.theta) : ctx.theta;
  bool have = false;
  ClassLabel best;
  for (int v : ctx.acting.elems) {
    QmodZVector s2 = apply(ctx.W->elements[static_cast<size_t>(v)], s);
    int tv = twist_conj(ctx, theta_inv, v);
    int w2 = ctx.W->mul(ctx.W->mul(v, w),
                        ctx.W->inverse[static_cast<size_t>(tv)]);
    // Skip early when s2 is already beaten.
    if (have && best.s < s2) continue;
    const Subgroup& H = connected_stabilizer_cached(ctx, s2, cc);
    int rep = coset_min_rep(*ctx.W, H, w2);
    ClassLabel cand{s2, rep};
    if (!have || cand < best) {
      best = cand;
      have = true;
    }
  }
  return best;
}

ClassLabel canonical_inertial_form(const LabelContext& ctx,
                                   const QmodZVector& s, int w,
                                   StabilizerCache* cache) {
  if (!ctx.acting.contains(w))
    throw IncompatiblePair("canonical_inertial_form: twist outside the group");
  if (apply(frobenius_matrix(ctx, w), s) != s)
    throw IncompatiblePair(
        "canonical_inertial_form: point is not fixed by the twisted "
        "Frobenius");
  return canonicalize(ctx, s, w, cache);
}

QmodZVector geometric_class(const LabelContext& ctx, const QmodZVector& s) {
  QmodZVector best = s;
  for (int v : ctx.acting.elems) {
    QmodZVector s2 = apply(ctx.W->elements[static_cast<size_t>(v)], s);
    if (s2 < best) best = s2;
  }
  return best;
}

ClassEnumeration rational_classes(const LabelContext& ctx, const Int& N) {
  if (N < 1 || N > kEnumerationCap)
    throw BoundTooLarge("rational_classes: order bound out of range");
  for (const Int& p : ctx.excluded_primes)
    if (N % p == 0)
      throw BoundTooLarge(
          "rational_classes: order bound shares a factor with an excluded "
          "prime");

  // Enumerate per twist in parallel (deterministic: results keyed by the
  // acting-element slot, merged in order).
  int count = ctx.acting.size();
  std::function<std::vector<ClassLabel>(int)> work =
      [&](int slot) -> std::vector<ClassLabel> {
    int w = ctx.acting.elems[static_cast<size_t>(slot)];
    StabilizerCache cache;
    std::vector<ClassLabel> found;
    for (const QmodZVector& s : torus_fixed_points(ctx, w)) {
      if (N % s.order() != 0) continue;
      if (!s.order_coprime_to(ctx.excluded_primes)) continue;
      found.push_back(canonicalize(ctx, s, w, &cache));
    }
    return found;
  };
  std::vector<std::vector<ClassLabel>> per_w =
      parallel_map<std::vector<ClassLabel>>(count, work);

  std::set<ClassLabel> dedup;
  for (const auto& v : per_w) dedup.insert(v.begin(), v.end());

  ClassEnumeration out;
  out.labels.assign(dedup.begin(), dedup.end());
  std::set<QmodZVector> geoms;
  for (const ClassLabel& l : out.labels)
    geoms.insert(geometric_class(ctx, l.s));
  out.geometric.assign(geoms.begin(), geoms.end());
  for (const ClassLabel& l : out.labels) {
    QmodZVector g = geometric_class(ctx, l.s);
    int gi = static_cast<int>(
        std::lower_bound(out.geometric.begin(), out.geometric.end(), g) -
        out.geometric.begin());
    out.geometric_of_label.push_back(gi);
  }
  return out;
}

QmodZVector theta_to_s(const LabelContext& ctx, int w,
                       const IntVec& theta_char) {
  int n = ctx.R->rank;
  IntMatrix m = frobenius_matrix(ctx, w) - IntMatrix::identity(n);
  if (det(m) == 0)
    throw SingularMatrix("theta_to_s: (frobenius - 1) is singular");
  RatVec b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] =
      Rat(theta_char[static_cast<size_t>(i)]);
  return QmodZVector(solve_rational(m, b));
}

IntVec s_to_theta(const LabelContext& ctx, int w, const QmodZVector& s) {
  int n = ctx.R->rank;
  IntMatrix m = frobenius_matrix(ctx, w) - IntMatrix::identity(n);
  if (apply(frobenius_matrix(ctx, w), s) != s)
    throw IncompatiblePair("s_to_theta: point is not fixed by the Frobenius");
  IntVec out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rat acc = 0;
    for (int j = 0; j < n; ++j) acc += Rat(m(i, j)) * s[j];
    assert(acc.get_den() == 1);
    out[static_cast<size_t>(i)] = acc.get_num();
  }
  return out;
}

bool theta_chars_equal(const LabelContext& ctx, int w, const IntVec& x,
                       const IntVec& y) {
  int n = ctx.R->rank;
  IntMatrix m = frobenius_matrix(ctx, w) - IntMatrix::identity(n);
  IntVec diff(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) diff[static_cast<size_t>(i)] =
      x[static_cast<size_t>(i)] - y[static_cast<size_t>(i)];
  return lattice_contains(m, diff);
}

IntVec trace_map(const LabelContext& ctx, int w, const IntVec& x, int m) {
  int n = ctx.R->rank;
  IntMatrix f = frobenius_matrix(ctx, w);
  IntVec acc(static_cast<size_t>(n), Int(0));
  IntVec cur = x;
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] +=
        cur[static_cast<size_t>(i)];
    cur = f * cur;
  }
  return acc;
}

ClassLabel ell_regular_part(const LabelContext& ctx, const ClassLabel& label,
                            const Int& ell) {
  Int n = label.s.order();
  Int ell_part, cofactor;
  split_prime_power(n, ell, ell_part, cofactor);
  Int r;
  if (ell_part == 1) {
    r = 1;
  } else if (cofactor == 1) {
    r = 0;
  } else {
    // r = 0 mod ell_part, r = 1 mod cofactor.
    r = ell_part * mod_inverse(ell_part, cofactor);
  }
  QmodZVector s2 = scale(r, label.s);
  return canonicalize(ctx, s2, label.wbar);
}

bool is_elliptic(const LabelContext& ctx, const ClassLabel& label) {
  int n = ctx.R->rank;
  if (n == 0) return true;
  std::vector<IntVec> refl_coroots, all_coroots;
  for (int r : ctx.root_subset) {
    all_coroots.push_back(ctx.R->coroots[static_cast<size_t>(r)]);
    if (pairs_to_integer(label.s, ctx.R->coroots[static_cast<size_t>(r)]))
      refl_coroots.push_back(ctx.R->coroots[static_cast<size_t>(r)]);
  }
  IntMatrix t = dual_action(
      ctx.W->elements[static_cast<size_t>(label.wbar)] * ctx.theta);
  IntMatrix theta_y = dual_action(ctx.theta);
  IntMatrix id = IntMatrix::identity(n);
  int fix_label =
      n - rank_rational(hconcat(t - id, columns_matrix(n, refl_coroots)));
  int fix_ambient =
      n - rank_rational(hconcat(theta_y - id, columns_matrix(n, all_coroots)));
  return fix_label == fix_ambient;
}

}  // namespace levelzero
