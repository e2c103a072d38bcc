#include "levelzero/alcove.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "levelzero/errors.hpp"
#include "levelzero/smith.hpp"

namespace levelzero {

namespace {

constexpr int kWalkCap = 100000;
constexpr int kSymmetryCap = 10000;

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

// Coefficients of a root in the basis of the simple roots.
RatVec expand_in_simples(const RootDatum& R, const IntVec& root) {
  int n = R.rank;
  int k = static_cast<int>(R.simples.size());
  RatMatrix aug(n, k + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j)
      aug(i, j) = Rat(R.roots[static_cast<size_t>(R.simples[static_cast<size_t>(j)])]
                          [static_cast<size_t>(i)]);
    aug(i, k) = Rat(root[static_cast<size_t>(i)]);
  }
  std::vector<int> pivots;
  int rank = row_reduce(aug, &pivots);
  assert(rank == k);  // simple roots are linearly independent
  for (int r = rank; r < n; ++r) assert(aug(r, k) == 0);
  RatVec x(static_cast<size_t>(k), Rat(0));
  for (int r = 0; r < rank; ++r) x[static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
      aug(r, k);
  return x;
}

Rat node_value(const AlcoveComplex& A, int node, const RatVec& p) {
  const AlcoveNode& nd = A.nodes[static_cast<size_t>(node)];
  const IntVec& root = A.R->roots[static_cast<size_t>(nd.root_index)];
  Rat acc(nd.constant);
  for (size_t i = 0; i < p.size(); ++i) acc += Rat(root[i]) * p[i];
  return acc;
}

// Follows the point c + lambda back into the base alcove by reflecting in
// the first violated wall, and reads off the induced symmetry.
AlcoveSymmetry symmetry_from_translation(const AlcoveComplex& A,
                                         const IntVec& lambda) {
  const RootDatum& R = *A.R;
  const WeylGroup& W = *A.W;
  int n = R.rank;
  const RatVec& c = A.facets[static_cast<size_t>(A.chamber)].barycenter;

  RatVec p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] =
      c[static_cast<size_t>(i)] + Rat(lambda[static_cast<size_t>(i)]);
  IntMatrix L = IntMatrix::identity(n);
  IntVec t = lambda;

  for (int step = 0;; ++step) {
    if (step > kWalkCap) throw TooLarge("alcove walk did not terminate");
    int violated = -1;
    for (size_t j = 0; j < A.nodes.size(); ++j) {
      if (node_value(A, static_cast<int>(j), p) < 0) {
        violated = static_cast<int>(j);
        break;
      }
    }
    if (violated < 0) break;
    const AlcoveNode& nd = A.nodes[static_cast<size_t>(violated)];
    const IntVec& root = R.roots[static_cast<size_t>(nd.root_index)];
    const IntVec& coroot = R.coroots[static_cast<size_t>(nd.root_index)];
    Rat value = node_value(A, violated, p);
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] -=
        value * Rat(coroot[static_cast<size_t>(i)]);
    // Reflection on the cocharacter side: y - coroot <root, y>, with the
    // affine shift -constant * coroot.
    IntMatrix M = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        M(i, j) -= coroot[static_cast<size_t>(i)] * root[static_cast<size_t>(j)];
    L = M * L;
    t = M * t;
    for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] -=
        nd.constant * coroot[static_cast<size_t>(i)];
  }

  // The walk lands on the chamber barycenter up to a central drift: every
  // wall sees the same values as at the barycenter itself.
  for (size_t j = 0; j < A.nodes.size(); ++j)
    assert(node_value(A, static_cast<int>(j), p) ==
           node_value(A, static_cast<int>(j), c));

  AlcoveSymmetry g;
  g.linear = W.index(dual_action(L));
  if (g.linear < 0)
    throw UnsupportedSpec("alcove symmetry has no finite linear part");

  // Image of each wall panel, read off from its barycenter.
  g.node_perm.assign(A.nodes.size(), -1);
  std::vector<bool> hit(A.nodes.size(), false);
  for (size_t j = 0; j < A.nodes.size(); ++j) {
    std::vector<int> single{static_cast<int>(j)};
    auto it = A.facet_of_vanishing.find(single);
    assert(it != A.facet_of_vanishing.end());
    const RatVec& b = A.facets[static_cast<size_t>(it->second)].barycenter;
    // The tracked pair maps x to L x + t, with the translation folded in.
    RatVec image(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) image[static_cast<size_t>(i)] +=
          Rat(L(i, k)) * b[static_cast<size_t>(k)];
      image[static_cast<size_t>(i)] += Rat(t[static_cast<size_t>(i)]);
    }
    int target = -1;
    for (size_t m = 0; m < A.nodes.size(); ++m) {
      Rat v = node_value(A, static_cast<int>(m), image);
      assert(v >= 0);
      if (v == 0) {
        assert(target < 0);  // panel interiors meet exactly one wall
        target = static_cast<int>(m);
      }
    }
    assert(target >= 0);
    assert(!hit[static_cast<size_t>(target)]);
    hit[static_cast<size_t>(target)] = true;
    g.node_perm[j] = target;
  }
  return g;
}

AlcoveSymmetry compose(const WeylGroup& W, const AlcoveSymmetry& a,
                       const AlcoveSymmetry& b) {
  AlcoveSymmetry r;
  r.linear = W.mul(a.linear, b.linear);
  r.node_perm.resize(b.node_perm.size());
  for (size_t j = 0; j < b.node_perm.size(); ++j)
    r.node_perm[j] =
        a.node_perm[static_cast<size_t>(b.node_perm[j])];
  return r;
}

}  // namespace

bool AlcoveComplex::is_face(int x, int sigma) const {
  const auto& vx = facets[static_cast<size_t>(x)].vanishing;
  const auto& vs = facets[static_cast<size_t>(sigma)].vanishing;
  return std::includes(vx.begin(), vx.end(), vs.begin(), vs.end());
}

int AlcoveComplex::mapped_facet(const AlcoveSymmetry& g, int facet) const {
  std::vector<int> image;
  for (int node : facets[static_cast<size_t>(facet)].vanishing)
    image.push_back(g.node_perm[static_cast<size_t>(node)]);
  std::sort(image.begin(), image.end());
  auto it = facet_of_vanishing.find(image);
  assert(it != facet_of_vanishing.end());
  return it->second;
}

AlcoveComplex build_alcove(const RootDatum& R, const WeylGroup& W) {
  if (!R.theta_is_identity())
    throw TwistedUnsupported(
        "the alcove decomposition handles split data only");
  AlcoveComplex A;
  A.R = &R;
  A.W = &W;
  int n = R.rank;
  int k = static_cast<int>(R.simples.size());

  // Components of the simple roots under non-orthogonality.
  std::vector<int> comp_of_simple(static_cast<size_t>(k), -1);
  int comp_count = 0;
  for (int seed = 0; seed < k; ++seed) {
    if (comp_of_simple[static_cast<size_t>(seed)] >= 0) continue;
    std::vector<int> stack{seed};
    comp_of_simple[static_cast<size_t>(seed)] = comp_count;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < k; ++b) {
        if (comp_of_simple[static_cast<size_t>(b)] >= 0) continue;
        Int pairing = dot(
            R.roots[static_cast<size_t>(R.simples[static_cast<size_t>(a)])],
            R.coroots[static_cast<size_t>(R.simples[static_cast<size_t>(b)])]);
        if (pairing != 0) {
          comp_of_simple[static_cast<size_t>(b)] = comp_count;
          stack.push_back(b);
        }
      }
    }
    ++comp_count;
  }

  // Highest root of each component, by maximal coefficient sum.
  std::vector<int> highest(static_cast<size_t>(comp_count), -1);
  std::vector<Rat> best_height(static_cast<size_t>(comp_count), Rat(-1));
  for (size_t r = 0; r < R.roots.size(); ++r) {
    RatVec coeff = expand_in_simples(R, R.roots[r]);
    int comp = -1;
    Rat height(0);
    for (int j = 0; j < k; ++j) {
      height += coeff[static_cast<size_t>(j)];
      if (coeff[static_cast<size_t>(j)] != 0)
        comp = comp_of_simple[static_cast<size_t>(j)];
    }
    assert(comp >= 0);
    if (height > best_height[static_cast<size_t>(comp)]) {
      best_height[static_cast<size_t>(comp)] = height;
      highest[static_cast<size_t>(comp)] = static_cast<int>(r);
    }
  }

  // Walls: one extra node per component, then its simples in order.
  A.components.resize(static_cast<size_t>(comp_count));
  for (int comp = 0; comp < comp_count; ++comp) {
    AlcoveNode extra;
    IntVec neg = R.roots[static_cast<size_t>(highest[static_cast<size_t>(comp)])];
    for (auto& e : neg) e = -e;
    extra.root_index = R.find_root(neg);
    assert(extra.root_index >= 0);
    extra.constant = 1;
    extra.component = comp;
    extra.extra = true;
    A.components[static_cast<size_t>(comp)].push_back(
        static_cast<int>(A.nodes.size()));
    A.nodes.push_back(extra);
    for (int j = 0; j < k; ++j) {
      if (comp_of_simple[static_cast<size_t>(j)] != comp) continue;
      AlcoveNode nd;
      nd.root_index = R.simples[static_cast<size_t>(j)];
      nd.constant = 0;
      nd.component = comp;
      nd.extra = false;
      A.components[static_cast<size_t>(comp)].push_back(
          static_cast<int>(A.nodes.size()));
      A.nodes.push_back(nd);
    }
  }
  int node_count = static_cast<int>(A.nodes.size());

  // Vertex opposite each wall: the point of the component simplex where all
  // the other walls of that component vanish (zero for the extra wall).
  A.opposite_vertex.assign(A.nodes.size(),
                           RatVec(static_cast<size_t>(n), Rat(0)));
  for (int comp = 0; comp < comp_count; ++comp) {
    const std::vector<int>& comp_nodes = A.components[static_cast<size_t>(comp)];
    std::vector<int> comp_coroots;  // root indices of the component simples
    for (int node : comp_nodes)
      if (!A.nodes[static_cast<size_t>(node)].extra)
        comp_coroots.push_back(A.nodes[static_cast<size_t>(node)].root_index);
    int m = static_cast<int>(comp_coroots.size());
    for (int node : comp_nodes) {
      if (A.nodes[static_cast<size_t>(node)].extra) continue;  // origin
      // Solve in the span of the component's simple coroots: the other
      // simples vanish and the highest root takes the value one.
      RatMatrix sys(m, m + 1);
      int row = 0;
      for (int other : comp_nodes) {
        if (other == node || A.nodes[static_cast<size_t>(other)].extra)
          continue;
        const IntVec& root =
            R.roots[static_cast<size_t>(A.nodes[static_cast<size_t>(other)].root_index)];
        for (int col = 0; col < m; ++col)
          sys(row, col) = Rat(dot(root, R.coroots[static_cast<size_t>(
                                            comp_coroots[static_cast<size_t>(col)])]));
        sys(row, m) = 0;
        ++row;
      }
      const IntVec& high = R.roots[static_cast<size_t>(highest[static_cast<size_t>(comp)])];
      for (int col = 0; col < m; ++col)
        sys(row, col) = Rat(dot(high, R.coroots[static_cast<size_t>(
                                          comp_coroots[static_cast<size_t>(col)])]));
      sys(row, m) = 1;
      int rank = row_reduce(sys);
      assert(rank == m);
      RatVec point(static_cast<size_t>(n), Rat(0));
      for (int col = 0; col < m; ++col) {
        const IntVec& cr =
            R.coroots[static_cast<size_t>(comp_coroots[static_cast<size_t>(col)])];
        for (int i = 0; i < n; ++i)
          point[static_cast<size_t>(i)] += sys(col, m) * Rat(cr[static_cast<size_t>(i)]);
      }
      A.opposite_vertex[static_cast<size_t>(node)] = point;
    }
  }

  // Facets: subsets of walls, proper within every component, smallest and
  // lexicographically first subsets first.
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << node_count); ++mask) {
    std::vector<int> s;
    for (int j = 0; j < node_count; ++j)
      if (mask & (1 << j)) s.push_back(j);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (auto& s : subsets) {
    bool proper = true;
    for (int comp = 0; comp < comp_count && proper; ++comp) {
      size_t in = 0;
      for (int node : A.components[static_cast<size_t>(comp)])
        if (std::binary_search(s.begin(), s.end(), node)) ++in;
      if (in == A.components[static_cast<size_t>(comp)].size()) proper = false;
    }
    if (!proper) continue;
    AlcoveFacet f;
    f.vanishing = s;
    f.dim = n - static_cast<int>(s.size());
    f.barycenter.assign(static_cast<size_t>(n), Rat(0));
    bool vertex = true;
    for (int comp = 0; comp < comp_count; ++comp) {
      const auto& comp_nodes = A.components[static_cast<size_t>(comp)];
      std::vector<int> spanning;
      for (int node : comp_nodes)
        if (!std::binary_search(s.begin(), s.end(), node))
          spanning.push_back(node);
      if (spanning.size() != 1) vertex = false;
      for (int node : spanning) {
        const RatVec& v = A.opposite_vertex[static_cast<size_t>(node)];
        for (int i = 0; i < n; ++i)
          f.barycenter[static_cast<size_t>(i)] +=
              v[static_cast<size_t>(i)] / Rat(static_cast<long>(spanning.size()));
      }
    }
    for (size_t r = 0; r < R.roots.size(); ++r) {
      Rat acc(0);
      for (int i = 0; i < n; ++i)
        acc += Rat(R.roots[r][static_cast<size_t>(i)]) *
               f.barycenter[static_cast<size_t>(i)];
      if (acc.get_den() == 1) f.local_roots.push_back(static_cast<int>(r));
    }
    f.vertex = vertex;
    if (vertex) {
      std::vector<int> gens;
      for (int r : f.local_roots)
        gens.push_back(W.refl_of_root[static_cast<size_t>(r)]);
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      f.hyperspecial = subgroup_generated(W, gens).size() == W.size();
    }
    A.facet_of_vanishing.emplace(f.vanishing,
                                 static_cast<int>(A.facets.size()));
    A.facets.push_back(std::move(f));
  }
  A.chamber = A.facet_of_vanishing.at({});

  // Symmetries: one walk per generator of the cocharacter lattice modulo
  // the coroot lattice (torsion and free directions alike).
  std::vector<IntVec> lifts;
  {
    std::vector<IntVec> crs;
    for (const auto& c : R.coroots) crs.push_back(c);
    IntMatrix B = columns_matrix(n, crs);
    SmithDecomposition sd = smith_decompose(B);
    IntMatrix U_inv = inverse_unimodular(sd.U);
    int diag = std::min(B.rows(), B.cols());
    for (int i = 0; i < n; ++i) {
      Int d = i < diag ? sd.D(i, i) : Int(0);
      if (d == 1) continue;  // trivial quotient direction
      IntVec lift(static_cast<size_t>(n));
      for (int r = 0; r < n; ++r) lift[static_cast<size_t>(r)] = U_inv(r, i);
      lifts.push_back(std::move(lift));
    }
  }
  AlcoveSymmetry ident;
  ident.linear = 0;
  ident.node_perm.resize(A.nodes.size());
  std::iota(ident.node_perm.begin(), ident.node_perm.end(), 0);
  std::set<AlcoveSymmetry> closure{ident};
  for (const IntVec& lift : lifts) {
    AlcoveSymmetry g = symmetry_from_translation(A, lift);
    A.symmetry_generators.push_back(g);
    closure.insert(g);
  }
  for (;;) {
    std::set<AlcoveSymmetry> next = closure;
    for (const auto& a : closure)
      for (const auto& b : closure) next.insert(compose(W, a, b));
    if (next.size() > static_cast<size_t>(kSymmetryCap))
      throw TooLarge("alcove symmetry closure exceeds the cap");
    if (next.size() == closure.size()) break;
    closure = std::move(next);
  }
  A.symmetries.assign(closure.begin(), closure.end());
  return A;
}

LabelContext facet_context(const AlcoveComplex& A, int facet, const Int& q,
                           std::vector<Int> excluded_primes) {
  const AlcoveFacet& f = A.facets[static_cast<size_t>(facet)];
  LabelContext ctx;
  ctx.R = A.R;
  ctx.W = A.W;
  std::vector<int> gens;
  for (int r : f.local_roots)
    gens.push_back(A.W->refl_of_root[static_cast<size_t>(r)]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  ctx.acting = subgroup_generated(*A.W, gens);
  ctx.root_subset = f.local_roots;
  ctx.theta = A.R->theta;
  ctx.q = q;
  ctx.excluded_primes = std::move(excluded_primes);
  return ctx;
}

int Decomposition::pair_id(int facet, const ClassLabel& c) const {
  std::pair<int, ClassLabel> key(facet, c);
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), key,
      [](const std::pair<int, ClassLabel>& a,
         const std::pair<int, ClassLabel>& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
  if (it == pairs.end() || it->first != facet || !(it->second == c)) return -1;
  return static_cast<int>(it - pairs.begin());
}

ClassLabel Decomposition::restricted(int sigma, const ClassLabel& c,
                                     int x) const {
  if (!alcove.is_face(x, sigma))
    throw NotAFace("restriction target is not a face of the facet");
  return canonicalize(facet_ctx[static_cast<size_t>(x)], c.s, c.wbar);
}

std::pair<int, ClassLabel> Decomposition::transported(const AlcoveSymmetry& g,
                                                      int sigma,
                                                      const ClassLabel& c) const {
  int target = alcove.mapped_facet(g, sigma);
  const WeylGroup& Wg = *W;
  QmodZVector s2 = apply(Wg.elements[static_cast<size_t>(g.linear)], c.s);
  int w2 = Wg.mul(Wg.mul(g.linear, c.wbar),
                  Wg.inverse[static_cast<size_t>(g.linear)]);
  return {target, canonicalize(facet_ctx[static_cast<size_t>(target)], s2, w2)};
}

ClassLabel Decomposition::globalized(const ClassLabel& c) const {
  return canonicalize(global_ctx, c.s, c.wbar);
}

std::vector<int> Decomposition::closure(std::vector<int> seed) const {
  std::set<int> touched;
  for (int id : seed) {
    assert(id >= 0 && id < static_cast<int>(pairs.size()));
    touched.insert(system_of[static_cast<size_t>(id)]);
  }
  std::vector<int> out;
  for (int sys : touched)
    out.insert(out.end(), systems[static_cast<size_t>(sys)].begin(),
               systems[static_cast<size_t>(sys)].end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Decomposition::is_coherent(const std::vector<int>& pair_set) const {
  std::vector<int> set = pair_set;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  auto in_set = [&](int id) {
    return std::binary_search(set.begin(), set.end(), id);
  };
  // Stability under the alcove symmetries.
  for (const AlcoveSymmetry& g : alcove.symmetry_generators) {
    for (int id : set) {
      auto [facet, label] = pairs[static_cast<size_t>(id)];
      auto [tf, tc] = transported(g, facet, label);
      int tid = pair_id(tf, tc);
      assert(tid >= 0);
      if (!in_set(tid)) return false;
    }
  }
  // At every facet, the member classes are exactly the ones whose
  // restriction to each vertex face is a member there.
  for (int sigma = 0; sigma < static_cast<int>(alcove.facets.size());
       ++sigma) {
    for (int x = 0; x < static_cast<int>(alcove.facets.size()); ++x) {
      if (x == sigma || !alcove.facets[static_cast<size_t>(x)].vertex ||
          !alcove.is_face(x, sigma))
        continue;
      for (const ClassLabel& c : facet_classes[static_cast<size_t>(sigma)]) {
        int cid = pair_id(sigma, c);
        int rid = pair_id(x, restricted(sigma, c, x));
        assert(cid >= 0 && rid >= 0);
        if (in_set(cid) != in_set(rid)) return false;
      }
    }
  }
  return true;
}

Decomposition decompose(const RootDatum& R, const WeylGroup& W, const Int& q,
                        const Int& bound, std::vector<Int> excluded_primes,
                        int base_vertex) {
  Decomposition D;
  D.R = &R;
  D.W = &W;
  D.q = q;
  D.bound = bound;
  D.excluded = excluded_primes;
  D.alcove = build_alcove(R, W);
  D.global_ctx = make_global_context(R, W, q, excluded_primes);
  D.global_enum = rational_classes(D.global_ctx, bound);

  int facet_count = static_cast<int>(D.alcove.facets.size());
  for (int f = 0; f < facet_count; ++f) {
    D.facet_ctx.push_back(facet_context(D.alcove, f, q, excluded_primes));
    D.facet_classes.push_back(
        rational_classes(D.facet_ctx.back(), bound).labels);
  }
  for (int f = 0; f < facet_count; ++f)
    for (const ClassLabel& c : D.facet_classes[static_cast<size_t>(f)])
      D.pairs.emplace_back(f, c);

  // Base vertex: the origin by default (all simple walls vanish), or the
  // caller's choice, which must be a hyperspecial vertex.
  std::vector<int> origin_vanishing;
  for (size_t j = 0; j < D.alcove.nodes.size(); ++j)
    if (!D.alcove.nodes[j].extra)
      origin_vanishing.push_back(static_cast<int>(j));
  int origin = D.alcove.facet_of_vanishing.at(origin_vanishing);
  assert(D.alcove.facets[static_cast<size_t>(origin)].hyperspecial);
  if (base_vertex < 0) {
    D.base_vertex = origin;
  } else {
    if (base_vertex >= facet_count ||
        !D.alcove.facets[static_cast<size_t>(base_vertex)].hyperspecial)
      throw BadVertex("base vertex must name a hyperspecial vertex facet");
    D.base_vertex = base_vertex;
  }

  // Merge along restriction to vertex faces and along alcove symmetries.
  UnionFind uf(static_cast<int>(D.pairs.size()));
  std::vector<StabilizerCache> caches(static_cast<size_t>(facet_count));
  std::vector<std::vector<int>> vertex_faces(static_cast<size_t>(facet_count));
  for (int sigma = 0; sigma < facet_count; ++sigma)
    for (int x = 0; x < facet_count; ++x)
      if (x != sigma && D.alcove.facets[static_cast<size_t>(x)].vertex &&
          D.alcove.is_face(x, sigma))
        vertex_faces[static_cast<size_t>(sigma)].push_back(x);

  for (size_t id = 0; id < D.pairs.size(); ++id) {
    int sigma = D.pairs[id].first;
    const ClassLabel& c = D.pairs[id].second;
    for (int x : vertex_faces[static_cast<size_t>(sigma)]) {
      ClassLabel r = canonicalize(D.facet_ctx[static_cast<size_t>(x)], c.s,
                                  c.wbar, &caches[static_cast<size_t>(x)]);
      int rid = D.pair_id(x, r);
      assert(rid >= 0);
      uf.join(static_cast<int>(id), rid);
    }
    for (const AlcoveSymmetry& g : D.alcove.symmetry_generators) {
      int target = D.alcove.mapped_facet(g, sigma);
      QmodZVector s2 = apply(W.elements[static_cast<size_t>(g.linear)], c.s);
      int w2 = W.mul(W.mul(g.linear, c.wbar),
                     W.inverse[static_cast<size_t>(g.linear)]);
      ClassLabel t = canonicalize(D.facet_ctx[static_cast<size_t>(target)], s2,
                                  w2, &caches[static_cast<size_t>(target)]);
      int tid = D.pair_id(target, t);
      assert(tid >= 0);
      uf.join(static_cast<int>(id), tid);
    }
  }

  std::map<int, int> system_index;  // union-find root -> system id
  D.system_of.assign(D.pairs.size(), -1);
  for (size_t id = 0; id < D.pairs.size(); ++id) {
    int root = uf.find(static_cast<int>(id));
    auto it = system_index.find(root);
    if (it == system_index.end()) {
      it = system_index.emplace(root, static_cast<int>(D.systems.size())).first;
      D.systems.emplace_back();
    }
    D.system_of[id] = it->second;
    D.systems[static_cast<size_t>(it->second)].push_back(static_cast<int>(id));
  }

  // Global class of every system, read off its first pair; the class is
  // constant across the system because both kinds of merge move preserve it.
  StabilizerCache global_cache;
  for (const std::vector<int>& sys : D.systems) {
    const auto& [facet, label] = D.pairs[static_cast<size_t>(sys.front())];
    (void)facet;
    D.system_global.push_back(
        canonicalize(D.global_ctx, label.s, label.wbar, &global_cache));
  }

  // Index the systems sharing one global class: 0 for the system through
  // the base vertex, then by first appearance.
  D.system_alpha.assign(D.systems.size(), -1);
  std::map<ClassLabel, std::vector<int>> grouped;
  for (size_t k = 0; k < D.systems.size(); ++k)
    grouped[D.system_global[k]].push_back(static_cast<int>(k));
  for (auto& [label, ids] : grouped) {
    int base_pair = D.pair_id(D.base_vertex, label);
    assert(base_pair >= 0);  // the base vertex carries every global class
    int base_system = D.system_of[static_cast<size_t>(base_pair)];
    int next = 1;
    for (int k : ids) {
      if (k == base_system)
        D.system_alpha[static_cast<size_t>(k)] = 0;
      else
        D.system_alpha[static_cast<size_t>(k)] = next++;
    }
  }
  return D;
}

}  // namespace levelzero
