#include "levelzero/weyl.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "levelzero/errors.hpp"

namespace levelzero {

namespace {
constexpr int kElementCap = 1000000;
}

int WeylGroup::index(const IntMatrix& m) const {
  auto it = index_of.find(m);
  return it == index_of.end() ? -1 : it->second;
}

int WeylGroup::mul(int a, int b) const {
  int r = index(elements[static_cast<size_t>(a)] *
                elements[static_cast<size_t>(b)]);
  return r;
}

IntMatrix WeylGroup::on_Y(int a) const {
  return transpose(elements[static_cast<size_t>(inverse[static_cast<size_t>(a)])]);
}

IntMatrix reflection_matrix(const RootDatum& R, int root_index) {
  const IntVec& alpha = R.roots[static_cast<size_t>(root_index)];
  const IntVec& alphav = R.coroots[static_cast<size_t>(root_index)];
  IntMatrix m = IntMatrix::identity(R.rank);
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j)
      m(i, j) -= alpha[static_cast<size_t>(i)] * alphav[static_cast<size_t>(j)];
  return m;
}

WeylGroup build_weyl(const RootDatum& R) {
  WeylGroup W;
  IntMatrix id = IntMatrix::identity(R.rank);
  W.elements.push_back(id);
  W.index_of[id] = 0;
  W.length.push_back(0);

  std::vector<IntMatrix> gens;
  for (int s : R.simples) gens.push_back(reflection_matrix(R, s));

  // Breadth-first closure under left multiplication by simple reflections:
  // depth equals Coxeter length, and discovery order within a depth is
  // fixed by the generator order.
  for (size_t head = 0; head < W.elements.size(); ++head) {
    for (const IntMatrix& g : gens) {
      IntMatrix m = g * W.elements[head];
      if (W.index_of.find(m) == W.index_of.end()) {
        if (static_cast<int>(W.elements.size()) >= kElementCap)
          throw TooLarge("Weyl enumeration exceeds the element cap");
        W.index_of[m] = static_cast<int>(W.elements.size());
        W.elements.push_back(m);
        W.length.push_back(W.length[head] + 1);
      }
    }
  }

  W.inverse.resize(W.elements.size());
  for (size_t i = 0; i < W.elements.size(); ++i) {
    int inv = W.index(inverse_unimodular(W.elements[i]));
    W.inverse[i] = inv;
  }
  for (const IntMatrix& g : gens) W.simple_refl.push_back(W.index(g));
  for (size_t r = 0; r < R.roots.size(); ++r)
    W.refl_of_root.push_back(W.index(reflection_matrix(R, static_cast<int>(r))));
  return W;
}

bool Subgroup::contains(int idx) const {
  return std::binary_search(elems.begin(), elems.end(), idx);
}

Subgroup full_subgroup(const WeylGroup& W) {
  Subgroup s;
  s.elems.resize(static_cast<size_t>(W.size()));
  for (int i = 0; i < W.size(); ++i) s.elems[static_cast<size_t>(i)] = i;
  s.gens = W.simple_refl;
  return s;
}

Subgroup subgroup_generated(const WeylGroup& W, std::vector<int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::set<int> seen = {0};
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier)
      for (int g : gens) {
        int m = W.mul(g, w);
        if (seen.insert(m).second) next.push_back(m);
      }
    frontier = std::move(next);
  }
  Subgroup s;
  s.elems.assign(seen.begin(), seen.end());
  s.gens = std::move(gens);
  return s;
}

Subgroup stabilizer(const WeylGroup& W, const Subgroup& within,
                    const QmodZVector& s) {
  Subgroup out;
  for (int w : within.elems)
    if (apply(W.elements[static_cast<size_t>(w)], s) == s)
      out.elems.push_back(w);
  // Any element set closed under the group laws works as its own generator
  // list; stabilizers are only ever used as plain subgroups.
  out.gens = out.elems;
  return out;
}

Subgroup connected_stabilizer(const WeylGroup& W, const RootDatum& R,
                              const std::vector<int>& root_subset,
                              const QmodZVector& s) {
  std::vector<int> gens;
  for (int r : root_subset)
    if (pairs_to_integer(s, R.coroots[static_cast<size_t>(r)]))
      gens.push_back(W.refl_of_root[static_cast<size_t>(r)]);
  return subgroup_generated(W, std::move(gens));
}

int coset_min_rep(const WeylGroup& W, const Subgroup& H, int w) {
  int best = -1;
  for (int h : H.elems) {
    int m = W.mul(h, w);
    if (best < 0 || m < best) best = m;
  }
  return best;
}

std::vector<int> coset_reps(const WeylGroup& W, const Subgroup& H,
                            const Subgroup& V) {
  std::set<int> reps;
  std::set<int> seen;
  for (int w : V.elems) {
    if (seen.count(w)) continue;
    int rep = coset_min_rep(W, H, w);
    reps.insert(rep);
    for (int h : H.elems) seen.insert(W.mul(h, w));
  }
  return std::vector<int>(reps.begin(), reps.end());
}

std::vector<std::vector<int>> twisted_classes(const WeylGroup& W,
                                              const IntMatrix& theta) {
  IntMatrix theta_inv = inverse_unimodular(theta);
  // Pre-twist every element: tw(v) = theta v theta^-1 must land in W.
  std::vector<int> twisted(static_cast<size_t>(W.size()));
  for (int v = 0; v < W.size(); ++v) {
    int t = W.index(theta * W.elements[static_cast<size_t>(v)] * theta_inv);
    if (t < 0)
      throw UnsupportedSpec("twist does not normalize the Weyl group");
    twisted[static_cast<size_t>(v)] = t;
  }
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(static_cast<size_t>(W.size()), 0);
  for (int w = 0; w < W.size(); ++w) {
    if (seen[static_cast<size_t>(w)]) continue;
    std::set<int> orbit;
    std::vector<int> frontier = {w};
    orbit.insert(w);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int u : frontier)
        for (int v = 0; v < W.size(); ++v) {
          int img = W.mul(W.mul(v, u),
                          W.inverse[static_cast<size_t>(twisted[
                              static_cast<size_t>(v)])]);
          if (orbit.insert(img).second) next.push_back(img);
        }
      frontier = std::move(next);
    }
    for (int u : orbit) seen[static_cast<size_t>(u)] = 1;
    orbits.push_back(std::vector<int>(orbit.begin(), orbit.end()));
  }
  return orbits;
}

}  // namespace levelzero
