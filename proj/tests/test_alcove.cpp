// levelzero: tests for the alcove complex and the decomposition into
// minimal coherent systems. The C2 census and its system structure are
// pinned from an independent hand computation; the remaining cases check
// structural laws that the implementation does not assume.
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "levelzero/alcove.hpp"
#include "levelzero/errors.hpp"
#include "levelzero/root_datum.hpp"
#include "levelzero/weyl.hpp"

using namespace levelzero;

namespace {

Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

QmodZVector qv(std::vector<Rat> entries) {
  return QmodZVector(RatVec(entries.begin(), entries.end()));
}

RatVec point(std::vector<Rat> entries) {
  return RatVec(entries.begin(), entries.end());
}

}  // namespace

TEST_CASE("rank-two symplectic alcove census") {
  RootDatum R = build_group(Family::Sp, 2);
  WeylGroup W = build_weyl(R);
  AlcoveComplex A = build_alcove(R, W);

  REQUIRE(A.nodes.size() == 3);
  // Extra wall first: highest root 2e1, so the wall root is -2e1 with
  // constant one; then the two simple walls.
  CHECK(R.roots[static_cast<size_t>(A.nodes[0].root_index)] == IntVec{-2, 0});
  CHECK(A.nodes[0].constant == 1);
  CHECK(A.nodes[0].extra);
  CHECK(R.roots[static_cast<size_t>(A.nodes[1].root_index)] == IntVec{1, -1});
  CHECK(A.nodes[1].constant == 0);
  CHECK(R.roots[static_cast<size_t>(A.nodes[2].root_index)] == IntVec{0, 2});
  CHECK(A.nodes[2].constant == 0);

  REQUIRE(A.facets.size() == 7);
  CHECK(A.chamber == 0);
  // Facets ordered by (size, lex) of the vanishing wall sets.
  CHECK(A.facets[0].vanishing == std::vector<int>{});
  CHECK(A.facets[1].vanishing == std::vector<int>{0});
  CHECK(A.facets[2].vanishing == std::vector<int>{1});
  CHECK(A.facets[3].vanishing == std::vector<int>{2});
  CHECK(A.facets[4].vanishing == std::vector<int>{0, 1});
  CHECK(A.facets[5].vanishing == std::vector<int>{0, 2});
  CHECK(A.facets[6].vanishing == std::vector<int>{1, 2});

  CHECK(A.facets[0].barycenter == point({rat(1, 3), rat(1, 6)}));
  CHECK(A.facets[1].barycenter == point({rat(1, 2), rat(1, 4)}));
  CHECK(A.facets[2].barycenter == point({rat(1, 4), rat(1, 4)}));
  CHECK(A.facets[3].barycenter == point({rat(1, 4), rat(0, 1)}));
  CHECK(A.facets[4].barycenter == point({rat(1, 2), rat(1, 2)}));
  CHECK(A.facets[5].barycenter == point({rat(1, 2), rat(0, 1)}));
  CHECK(A.facets[6].barycenter == point({rat(0, 1), rat(0, 1)}));

  CHECK(A.facets[0].dim == 2);
  CHECK(A.facets[4].dim == 0);

  // Roots integral on each facet: none on the chamber, one pair on each
  // panel, all eight at the two hyperspecial vertices, the four long ones
  // at the remaining vertex.
  CHECK(A.facets[0].local_roots.empty());
  CHECK(A.facets[1].local_roots.size() == 2);
  CHECK(A.facets[2].local_roots.size() == 2);
  CHECK(A.facets[3].local_roots.size() == 2);
  CHECK(A.facets[4].local_roots.size() == 8);
  CHECK(A.facets[5].local_roots.size() == 4);
  CHECK(A.facets[6].local_roots.size() == 8);
  {
    std::set<IntVec> longs;
    for (int r : A.facets[5].local_roots)
      longs.insert(R.roots[static_cast<size_t>(r)]);
    CHECK(longs == std::set<IntVec>{{-2, 0}, {0, -2}, {0, 2}, {2, 0}});
  }

  for (int f = 0; f < 7; ++f) {
    CHECK(A.facets[static_cast<size_t>(f)].vertex == (f >= 4));
  }
  CHECK(A.facets[4].hyperspecial);
  CHECK_FALSE(A.facets[5].hyperspecial);
  CHECK(A.facets[6].hyperspecial);

  // Cocharacters modulo coroots are trivial here: no symmetries beyond the
  // identity.
  CHECK(A.symmetry_generators.empty());
  REQUIRE(A.symmetries.size() == 1);
  CHECK(A.symmetries[0].linear == 0);

  // Face relation: a vertex below each panel, panels below the chamber.
  CHECK(A.is_face(4, 1));
  CHECK(A.is_face(5, 1));
  CHECK_FALSE(A.is_face(6, 1));
  CHECK(A.is_face(6, 2));
  CHECK(A.is_face(1, 0));
  CHECK_FALSE(A.is_face(0, 1));
  CHECK(A.is_face(3, 3));
}

TEST_CASE("rank-one alcove censuses") {
  SUBCASE("simply connected") {
    RootDatum R = build_group(Family::SL, 2);
    WeylGroup W = build_weyl(R);
    AlcoveComplex A = build_alcove(R, W);
    REQUIRE(A.facets.size() == 3);
    CHECK(A.facets[0].barycenter == point({rat(1, 4)}));
    CHECK(A.facets[1].barycenter == point({rat(1, 2)}));
    CHECK(A.facets[2].barycenter == point({rat(0, 1)}));
    CHECK(A.facets[1].hyperspecial);
    CHECK(A.facets[2].hyperspecial);
    CHECK(A.symmetries.size() == 1);
  }
  SUBCASE("adjoint") {
    RootDatum R = build_group(Family::PGL, 2);
    WeylGroup W = build_weyl(R);
    AlcoveComplex A = build_alcove(R, W);
    REQUIRE(A.facets.size() == 3);
    CHECK(A.facets[1].hyperspecial);
    CHECK(A.facets[2].hyperspecial);
    // The nontrivial cocharacter class swaps the two walls.
    REQUIRE(A.symmetries.size() == 2);
    REQUIRE(A.symmetry_generators.size() == 1);
    const AlcoveSymmetry& g = A.symmetry_generators[0];
    CHECK(g.node_perm == std::vector<int>{1, 0});
    CHECK(g.linear != 0);
    CHECK(A.mapped_facet(g, 1) == 2);
    CHECK(A.mapped_facet(g, 2) == 1);
    CHECK(A.mapped_facet(g, 0) == 0);
  }
  SUBCASE("one-dimensional torus") {
    RootDatum R = build_group(Family::GL, 1);
    WeylGroup W = build_weyl(R);
    AlcoveComplex A = build_alcove(R, W);
    REQUIRE(A.facets.size() == 1);
    CHECK(A.facets[0].dim == 1);
    CHECK(A.facets[0].vertex);
    CHECK(A.facets[0].hyperspecial);
    CHECK(A.symmetries.size() == 1);
  }
}

TEST_CASE("odd orthogonal alcove symmetry") {
  RootDatum R = build_group(Family::SOodd, 2);
  WeylGroup W = build_weyl(R);
  AlcoveComplex A = build_alcove(R, W);

  REQUIRE(A.facets.size() == 7);
  // Vertices: one with only the four long roots integral, two hyperspecial.
  CHECK(A.facets[4].vertex);
  CHECK_FALSE(A.facets[4].hyperspecial);
  CHECK(A.facets[4].local_roots.size() == 4);
  CHECK(A.facets[5].hyperspecial);
  CHECK(A.facets[6].hyperspecial);

  // The cocharacter class of e1 induces the swap of the extra wall with the
  // first simple wall; its linear part is the sign change on e1.
  REQUIRE(A.symmetries.size() == 2);
  REQUIRE(A.symmetry_generators.size() == 1);
  const AlcoveSymmetry& g = A.symmetry_generators[0];
  CHECK(g.node_perm == std::vector<int>{1, 0, 2});
  int e1 = R.find_root(IntVec{1, 0});
  REQUIRE(e1 >= 0);
  CHECK(g.linear == W.refl_of_root[static_cast<size_t>(e1)]);
  // It exchanges the two hyperspecial vertices and fixes the third vertex.
  CHECK(A.mapped_facet(g, 5) == 6);
  CHECK(A.mapped_facet(g, 6) == 5);
  CHECK(A.mapped_facet(g, 4) == 4);

  // Applying the swap twice returns every facet.
  for (int f = 0; f < 7; ++f)
    CHECK(A.mapped_facet(g, A.mapped_facet(g, f)) == f);
}

TEST_CASE("twisted data are rejected by the alcove builder") {
  RootDatum R = build_group(Family::U_quasisplit, 2);
  WeylGroup W = build_weyl(R);
  CHECK_THROWS_AS(build_alcove(R, W), TwistedUnsupported);
}

TEST_CASE("pinned decomposition of the rank-two symplectic group") {
  RootDatum R = build_group(Family::Sp, 2);
  WeylGroup W = build_weyl(R);
  Decomposition D = decompose(R, W, 3, 8, {3});

  CHECK(D.pairs.size() == 62);
  CHECK(D.systems.size() == 19);
  CHECK(D.global_enum.labels.size() == 10);
  CHECK(D.base_vertex == 6);  // the origin vertex

  // Per-facet class counts: trivial acting group on the chamber, one
  // reflection on each panel, the full group at the hyperspecial vertices.
  std::map<int, int> per_facet;
  for (const auto& [f, c] : D.pairs) per_facet[f]++;
  CHECK(per_facet == std::map<int, int>{
                         {0, 4}, {1, 8}, {2, 6}, {3, 8}, {4, 10}, {5, 16}, {6, 10}});

  // Expected number of minimal systems for each class of the full group.
  QmodZVector half_half = qv({rat(1, 2), rat(1, 2)});
  std::map<ClassLabel, std::vector<int>> grouped;
  for (size_t k = 0; k < D.systems.size(); ++k)
    grouped[D.system_global[k]].push_back(static_cast<int>(k));

  std::map<QmodZVector, std::vector<size_t>> counts_by_s;
  for (const auto& [lab, ids] : grouped)
    counts_by_s[lab.s].push_back(ids.size());
  for (auto& [s, c] : counts_by_s) std::sort(c.begin(), c.end());
  CHECK(counts_by_s[qv({rat(0, 1), rat(0, 1)})] == std::vector<size_t>{1});
  CHECK(counts_by_s[qv({rat(0, 1), rat(1, 2)})] == std::vector<size_t>{1, 2});
  CHECK(counts_by_s[half_half] == std::vector<size_t>{2, 2});
  CHECK(counts_by_s[qv({rat(1, 8), rat(3, 8)})] == std::vector<size_t>{1});
  CHECK(counts_by_s[qv({rat(1, 4), rat(1, 4)})] == std::vector<size_t>{2});
  CHECK(counts_by_s[qv({rat(0, 1), rat(1, 4)})] == std::vector<size_t>{2});
  CHECK(counts_by_s[qv({rat(1, 4), rat(1, 2)})] == std::vector<size_t>{2, 4});

  // The class with coordinate (1/2, 1/2) and trivial coset: two systems,
  // one spanning every facet, the other a single class at the non-special
  // vertex (1/2, 0), and that class is the elliptic one there.
  ClassLabel golden;
  golden.s = half_half;
  golden.wbar = 0;
  REQUIRE(grouped.count(golden) == 1);
  REQUIRE(grouped[golden].size() == 2);
  int big = grouped[golden][0];
  int small = grouped[golden][1];
  if (D.systems[static_cast<size_t>(big)].size() <
      D.systems[static_cast<size_t>(small)].size())
    std::swap(big, small);

  std::set<int> facets_of_big;
  for (int id : D.systems[static_cast<size_t>(big)])
    facets_of_big.insert(D.pairs[static_cast<size_t>(id)].first);
  CHECK(facets_of_big == std::set<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(D.system_alpha[static_cast<size_t>(big)] == 0);

  REQUIRE(D.systems[static_cast<size_t>(small)].size() == 1);
  int lone = D.systems[static_cast<size_t>(small)][0];
  CHECK(D.pairs[static_cast<size_t>(lone)].first == 5);
  CHECK(D.system_alpha[static_cast<size_t>(small)] == 1);

  // At that vertex the golden class has exactly two members, split by
  // ellipticity: the lone class is elliptic, the shared one is not.
  std::vector<ClassLabel> at_vertex;
  for (int id : D.systems[static_cast<size_t>(big)])
    if (D.pairs[static_cast<size_t>(id)].first == 5)
      at_vertex.push_back(D.pairs[static_cast<size_t>(id)].second);
  REQUIRE(at_vertex.size() == 1);
  const ClassLabel& lone_label = D.pairs[static_cast<size_t>(lone)].second;
  CHECK(lone_label.s == half_half);
  CHECK(lone_label.wbar != at_vertex[0].wbar);
  CHECK(is_elliptic(D.facet_ctx[5], lone_label));
  CHECK_FALSE(is_elliptic(D.facet_ctx[5], at_vertex[0]));

  // The companion class (1/2, 1/2) with nontrivial coset: two systems of
  // three classes each, one through each hyperspecial vertex, overlapping
  // exactly at the non-special vertex.
  ClassLabel companion;
  companion.s = half_half;
  for (const auto& [lab, ids] : grouped)
    if (lab.s == half_half && lab.wbar != 0) companion = lab;
  REQUIRE(companion.wbar != 0);
  std::vector<int> ids = grouped[companion];
  REQUIRE(ids.size() == 2);
  std::set<int> fa, fb;
  for (int id : D.systems[static_cast<size_t>(ids[0])])
    fa.insert(D.pairs[static_cast<size_t>(id)].first);
  for (int id : D.systems[static_cast<size_t>(ids[1])])
    fb.insert(D.pairs[static_cast<size_t>(id)].first);
  if (!fa.count(6)) std::swap(fa, fb);
  CHECK(fa == std::set<int>{3, 5, 6});
  CHECK(fb == std::set<int>{1, 4, 5});
  CHECK(D.system_alpha[static_cast<size_t>(ids[0])] !=
        D.system_alpha[static_cast<size_t>(ids[1])]);

  // Every pair of a system carries the same class of the full group.
  for (size_t k = 0; k < D.systems.size(); ++k)
    for (int id : D.systems[k])
      CHECK(D.globalized(D.pairs[static_cast<size_t>(id)].second) ==
            D.system_global[k]);

  // Alpha indices within one global class are 0, 1, 2, ... with 0 on the
  // system through the base vertex.
  for (const auto& [lab, sys_ids] : grouped) {
    std::set<int> alphas;
    for (int k : sys_ids) alphas.insert(D.system_alpha[static_cast<size_t>(k)]);
    REQUIRE(static_cast<int>(alphas.size()) ==
            static_cast<int>(sys_ids.size()));
    CHECK(*alphas.begin() == 0);
    CHECK(*alphas.rbegin() == static_cast<int>(alphas.size()) - 1);
    int base_pair = D.pair_id(D.base_vertex, lab);
    REQUIRE(base_pair >= 0);
    CHECK(D.system_alpha[static_cast<size_t>(
              D.system_of[static_cast<size_t>(base_pair)])] == 0);
  }
}

TEST_CASE("decomposition with an alternative base vertex") {
  RootDatum R = build_group(Family::Sp, 2);
  WeylGroup W = build_weyl(R);
  Decomposition D = decompose(R, W, 3, 8, {3}, 4);
  CHECK(D.base_vertex == 4);
  // The system counts do not move; only the alpha indexing does.
  CHECK(D.systems.size() == 19);
  QmodZVector half_half = qv({rat(1, 2), rat(1, 2)});
  for (size_t k = 0; k < D.systems.size(); ++k) {
    if (!(D.system_global[k].s == half_half) || D.system_global[k].wbar == 0)
      continue;
    std::set<int> fs;
    for (int id : D.systems[k]) fs.insert(D.pairs[static_cast<size_t>(id)].first);
    if (fs == std::set<int>{1, 4, 5}) CHECK(D.system_alpha[k] == 0);
    if (fs == std::set<int>{3, 5, 6}) CHECK(D.system_alpha[k] == 1);
  }

  CHECK_THROWS_AS(decompose(R, W, 3, 8, {3}, 0), BadVertex);  // chamber
  CHECK_THROWS_AS(decompose(R, W, 3, 8, {3}, 5), BadVertex);  // not special
  CHECK_THROWS_AS(decompose(R, W, 3, 8, {3}, 99), BadVertex);
}

TEST_CASE("symmetry transport merges the two special vertices") {
  SUBCASE("adjoint rank one") {
    RootDatum R = build_group(Family::PGL, 2);
    WeylGroup W = build_weyl(R);
    Decomposition D = decompose(R, W, 3, 8, {3});
    CHECK(D.global_enum.labels.size() == 3);
    CHECK(D.systems.size() == 3);  // one per class: the swap glues the ends
    for (int a : D.system_alpha) CHECK(a == 0);
  }
  SUBCASE("simply connected rank one keeps the ends apart") {
    RootDatum R = build_group(Family::SL, 2);
    WeylGroup W = build_weyl(R);
    Decomposition D = decompose(R, W, 3, 8, {3});
    CHECK(D.global_enum.labels.size() == 4);
    // Classes with trivial coset spread over the whole segment; the two
    // others live only on the vertices, which nothing connects.
    std::map<ClassLabel, int> per_label;
    for (size_t k = 0; k < D.systems.size(); ++k)
      per_label[D.system_global[k]]++;
    std::multiset<int> counts;
    for (auto& [lab, c] : per_label) counts.insert(c);
    CHECK(counts == std::multiset<int>{1, 1, 2, 2});
    CHECK(D.systems.size() == 6);
  }
  SUBCASE("odd orthogonal rank two") {
    RootDatum R = build_group(Family::SOodd, 2);
    WeylGroup W = build_weyl(R);
    Decomposition D = decompose(R, W, 3, 8, {3});
    std::map<ClassLabel, int> per_label;
    for (size_t k = 0; k < D.systems.size(); ++k)
      per_label[D.system_global[k]]++;
    // Hand-tallied along the torsion quotients: classes over coordinates
    // (0,0), (1/8,3/8), (1/4,1/4), (1/2,1/2) give one system each, the
    // remaining three classes two systems each.
    CHECK(D.global_enum.labels.size() == 7);
    std::multiset<int> counts;
    for (auto& [lab, c] : per_label) counts.insert(c);
    CHECK(counts == std::multiset<int>{1, 1, 1, 1, 2, 2, 2});
    CHECK(D.systems.size() == 10);
  }
}

TEST_CASE("restriction agrees with recanonicalization and rejects non-faces") {
  RootDatum R = build_group(Family::Sp, 2);
  WeylGroup W = build_weyl(R);
  Decomposition D = decompose(R, W, 3, 8, {3});

  // Restrict a chamber class to the origin vertex.
  ClassLabel c = D.facet_classes[0][1];
  ClassLabel r = D.restricted(0, c, 6);
  CHECK(D.pair_id(6, r) >= 0);
  CHECK(D.globalized(r) == D.globalized(c));

  // The two hyperspecial vertices are not faces of one another.
  CHECK_THROWS_AS(D.restricted(4, D.facet_classes[4][0], 6), NotAFace);
  // A vertex does not restrict to a panel above it.
  CHECK_THROWS_AS(D.restricted(6, D.facet_classes[6][0], 2), NotAFace);
}

TEST_CASE("closure laws on random seeds") {
  std::vector<std::pair<Family, int>> groups{{Family::Sp, 2}, {Family::SL, 2}};
  for (auto [fam, n] : groups) {
    RootDatum R = build_group(fam, n);
    WeylGroup W = build_weyl(R);
    Decomposition D = decompose(R, W, 3, 8, {3});
    int P = static_cast<int>(D.pairs.size());

    std::mt19937 rng(0x5EED0000u + static_cast<unsigned>(n));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> seed;
      for (int i = 0; i < P; ++i)
        if (rng() % 5 == 0) seed.push_back(i);
      std::vector<int> cl = D.closure(seed);

      // Extensive: the seed lies inside its closure.
      for (int id : seed)
        CHECK(std::binary_search(cl.begin(), cl.end(), id));
      // Idempotent.
      CHECK(D.closure(cl) == cl);
      // Monotone: enlarging the seed enlarges the closure.
      std::vector<int> bigger = seed;
      for (int i = 0; i < P; ++i)
        if (rng() % 11 == 0) bigger.push_back(i);
      std::vector<int> cl2 = D.closure(bigger);
      CHECK(std::includes(cl2.begin(), cl2.end(), cl.begin(), cl.end()));
      // Closures are coherent.
      if (trial < 5) CHECK(D.is_coherent(cl));
    }

    // The empty set and the full universe are coherent; each system is;
    // a strict nonempty subset of a system is not.
    CHECK(D.closure({}).empty());
    CHECK(D.is_coherent({}));
    std::vector<int> all(static_cast<size_t>(P));
    for (int i = 0; i < P; ++i) all[static_cast<size_t>(i)] = i;
    CHECK(D.is_coherent(all));
    for (size_t k = 0; k < D.systems.size() && k < 4; ++k) {
      CHECK(D.is_coherent(D.systems[k]));
      if (D.systems[k].size() > 1) {
        std::vector<int> broken(D.systems[k].begin() + 1,
                                D.systems[k].end());
        CHECK_FALSE(D.is_coherent(broken));
      }
    }
  }
}

TEST_CASE("decomposition of a bare torus") {
  RootDatum R = build_group(Family::GL, 1);
  WeylGroup W = build_weyl(R);
  Decomposition D = decompose(R, W, 3, 8, {3});
  CHECK(D.pairs.size() == 2);  // the two square classes of the fixed field
  CHECK(D.systems.size() == 2);
  for (int a : D.system_alpha) CHECK(a == 0);
  CHECK(D.is_coherent({0, 1}));
  CHECK(D.is_coherent({0}));
}

TEST_CASE("repeated decomposition is identical") {
  RootDatum R = build_group(Family::SOodd, 2);
  WeylGroup W = build_weyl(R);
  Decomposition a = decompose(R, W, 3, 8, {3});
  Decomposition b = decompose(R, W, 3, 8, {3});
  CHECK(a.pairs == b.pairs);
  CHECK(a.system_of == b.system_of);
  CHECK(a.systems == b.systems);
  CHECK(a.system_alpha == b.system_alpha);
  REQUIRE(a.system_global.size() == b.system_global.size());
  for (size_t k = 0; k < a.system_global.size(); ++k)
    CHECK(a.system_global[k] == b.system_global[k]);
}
