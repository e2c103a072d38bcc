#include "levelzero/labels.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "levelzero/errors.hpp"
#include "levelzero/qmodz.hpp"

namespace levelzero {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void join(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Coroots of the visible roots that pair integrally with s.
std::vector<IntVec> integral_coroots(const LabelContext& ctx,
                                     const QmodZVector& s) {
  std::vector<IntVec> out;
  for (int r : ctx.root_subset) {
    const IntVec& coroot = ctx.R->coroots[static_cast<size_t>(r)];
    Rat acc(0);
    for (int i = 0; i < s.dim(); ++i)
      acc += Rat(coroot[static_cast<size_t>(i)]) * s[i];
    if (acc.get_den() == 1) out.push_back(coroot);
  }
  return out;
}

// Cocharacter-side matrix of w*theta.
IntMatrix frobenius_on_Y(const LabelContext& ctx, int wbar) {
  return dual_action(ctx.W->elements[static_cast<size_t>(wbar)] * ctx.theta);
}

// Mixed-radix position of reduced coordinates in the element enumeration.
Int element_index(const FiniteAbelianGroup& g, const std::vector<Int>& coords) {
  Int idx(0);
  for (int j = 0; j < g.num_generators(); ++j) {
    idx *= g.invariant_factors()[static_cast<size_t>(j)];
    idx += coords[static_cast<size_t>(j)];
  }
  return idx;
}

IntVec lift_of(const FiniteAbelianGroup& g, const std::vector<Int>& coords) {
  IntVec lift(static_cast<size_t>(g.ambient_rank()), Int(0));
  for (int j = 0; j < g.num_generators(); ++j) {
    IntVec gen = g.generator_lift(j);
    for (size_t i = 0; i < lift.size(); ++i)
      lift[i] += coords[static_cast<size_t>(j)] * gen[i];
  }
  return lift;
}

}  // namespace

FiniteAbelianGroup kottwitz_group(const RootDatum& R) {
  std::vector<IntVec> coroots(R.coroots.begin(), R.coroots.end());
  return torsion_quotient(R.rank, coroots, R.theta_on_Y());
}

ComponentGroup component_group(const LabelContext& ctx, const ClassLabel& c) {
  const WeylGroup& W = *ctx.W;
  ComponentGroup out;
  out.full = stabilizer(W, ctx.acting, c.s);
  out.connected = connected_stabilizer(W, *ctx.R, ctx.root_subset, c.s);
  for (int u : out.full.elems)
    if (coset_min_rep(W, out.connected, u) == u) out.coset_reps.push_back(u);

  // A coset is kept when conjugation by w*theta preserves it.
  IntMatrix f = W.elements[static_cast<size_t>(c.wbar)] * ctx.theta;
  IntMatrix f_inv = ctx.R->rank > 0 ? inverse_unimodular(f) : f;
  for (int u : out.coset_reps) {
    IntMatrix conj = f * W.elements[static_cast<size_t>(u)] * f_inv;
    int idx = W.index(conj);
    if (idx < 0)
      throw UnsupportedSpec("stabilizer conjugation leaves the Weyl group");
    if (coset_min_rep(W, out.connected, idx) == u) out.twisted_fixed.push_back(u);
  }
  return out;
}

ClassInvariants class_invariants(const LabelContext& ctx, const ClassLabel& c) {
  const RootDatum& R = *ctx.R;
  int n = R.rank;
  ClassInvariants inv;
  inv.domain = torsion_quotient(n, integral_coroots(ctx, c.s),
                                frobenius_on_Y(ctx, c.wbar));
  inv.target = kottwitz_group(R);
  inv.pi0 = component_group(ctx, c);

  inv.target_elements = inv.target.elements();
  inv.fiber_sizes.assign(inv.target_elements.size(), Int(0));
  std::map<std::vector<Int>, int> target_index;
  for (size_t t = 0; t < inv.target_elements.size(); ++t)
    target_index.emplace(inv.target_elements[t], static_cast<int>(t));

  // Push every domain class through the identity of the ambient lattice.
  std::vector<std::vector<Int>> domain_elements = inv.domain.elements();
  std::map<std::vector<Int>, int> kernel_index;
  for (const std::vector<Int>& d : domain_elements) {
    IntVec lift = lift_of(inv.domain, d);
    assert(inv.target.class_is_torsion(lift));
    std::vector<Int> image = inv.target.reduce(inv.target.coords_of(lift));
    auto it = target_index.find(image);
    assert(it != target_index.end());
    inv.fiber_sizes[static_cast<size_t>(it->second)] += 1;
    bool zero = true;
    for (const Int& e : image) zero = zero && e == 0;
    if (zero) {
      kernel_index.emplace(d, static_cast<int>(inv.kernel.size()));
      inv.kernel.push_back(d);
    }
  }

  // Kernel classes up to the twisted-fixed part of the component group,
  // which acts through the cocharacter side and fixes the kernel.
  UnionFind uf(static_cast<int>(inv.kernel.size()));
  for (int u : inv.pi0.twisted_fixed) {
    IntMatrix action = ctx.W->on_Y(u);
    for (size_t k = 0; k < inv.kernel.size(); ++k) {
      IntVec moved = action * lift_of(inv.domain, inv.kernel[k]);
      assert(inv.domain.class_is_torsion(moved));
      std::vector<Int> coords = inv.domain.reduce(inv.domain.coords_of(moved));
      auto it = kernel_index.find(coords);
      assert(it != kernel_index.end());
      uf.join(static_cast<int>(k), it->second);
    }
  }
  Int orbits(0);
  for (size_t k = 0; k < inv.kernel.size(); ++k)
    if (uf.find(static_cast<int>(k)) == static_cast<int>(k)) orbits += 1;
  inv.kernel_orbits = orbits;
  return inv;
}

bool is_relevant(const ClassInvariants& inv, const std::vector<Int>& coords) {
  if (static_cast<int>(coords.size()) != inv.target.num_generators())
    return false;
  Int idx = element_index(inv.target, inv.target.reduce(coords));
  return inv.fiber_sizes[static_cast<size_t>(idx.get_si())] > 0;
}

std::vector<int> parameter_levi_roots(const LabelContext& ctx,
                                      const ClassLabel& c) {
  const RootDatum& R = *ctx.R;
  int n = R.rank;

  // Cut the fixed split part: s-integral roots vanish on it and w*theta
  // fixes it pointwise.
  std::vector<RatVec> rows;
  for (int r : ctx.root_subset) {
    const IntVec& coroot = R.coroots[static_cast<size_t>(r)];
    Rat acc(0);
    for (int i = 0; i < n; ++i)
      acc += Rat(coroot[static_cast<size_t>(i)]) * c.s[i];
    if (acc.get_den() != 1) continue;
    RatVec row(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      row[static_cast<size_t>(i)] =
          Rat(R.roots[static_cast<size_t>(r)][static_cast<size_t>(i)]);
    rows.push_back(std::move(row));
  }
  IntMatrix M = frobenius_on_Y(ctx, c.wbar);
  for (int i = 0; i < n; ++i) {
    RatVec row(static_cast<size_t>(n));
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      Int e = M(i, j) - (i == j ? 1 : 0);
      row[static_cast<size_t>(j)] = Rat(e);
      nonzero = nonzero || e != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }

  // Kernel basis of the stacked rows.
  RatMatrix mat(static_cast<int>(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < n; ++j) mat(static_cast<int>(r), j) = rows[r][static_cast<size_t>(j)];
  std::vector<int> pivots;
  int rank = rows.empty() ? 0 : row_reduce(mat, &pivots);
  std::vector<RatVec> basis;
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    RatVec v(static_cast<size_t>(n), Rat(0));
    v[static_cast<size_t>(f)] = Rat(1);
    for (int r = 0; r < rank; ++r)
      v[static_cast<size_t>(pivots[static_cast<size_t>(r)])] = -mat(r, f);
    basis.push_back(std::move(v));
  }

  std::vector<int> out;
  for (int r : ctx.root_subset) {
    const IntVec& root = R.roots[static_cast<size_t>(r)];
    bool vanishes = true;
    for (const RatVec& v : basis) {
      Rat acc(0);
      for (int i = 0; i < n; ++i)
        acc += Rat(root[static_cast<size_t>(i)]) * v[static_cast<size_t>(i)];
      if (acc != 0) vanishes = false;
    }
    if (vanishes) out.push_back(r);
  }
  return out;
}

LabelContext levi_label_context(const RootDatum& R, const WeylGroup& W,
                                const LeviDatum& L, const Int& q,
                                std::vector<Int> excluded_primes) {
  LabelContext ctx;
  ctx.R = &R;
  ctx.W = &W;
  std::vector<int> gens;
  for (int r : L.root_index_in_parent)
    gens.push_back(W.refl_of_root[static_cast<size_t>(r)]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  ctx.acting = subgroup_generated(W, gens);
  ctx.root_subset = L.root_index_in_parent;
  std::sort(ctx.root_subset.begin(), ctx.root_subset.end());
  ctx.theta = R.theta;
  ctx.q = q;
  ctx.excluded_primes = std::move(excluded_primes);
  return ctx;
}

}  // namespace levelzero
