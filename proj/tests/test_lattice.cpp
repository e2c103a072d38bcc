// Lattice-core tests. The reference values here are computed by independent
// oracles implemented inside this file (rational-inverse membership tests,
// Hermite reduction by plain Euclid, order statistics on residue boxes), not
// by the code under test; fixed seeds keep every run identical.
#include <doctest.h>

#include <random>

#include "levelzero/abelian.hpp"
#include "levelzero/errors.hpp"
#include "levelzero/matrix.hpp"
#include "levelzero/qmodz.hpp"
#include "levelzero/smith.hpp"

using namespace levelzero;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo,
                        int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_unimodular(const IntMatrix& m) {
  Int d = det(m);
  return d == 1 || d == -1;
}

// Oracle: number of classes x in Z^n / m Z^n with k * x = 0, counted by
// scanning a residue box and testing membership with the rational inverse.
// Each class meets the box [0, D)^n in exactly D^(n-1) points.
Int order_statistic_oracle(const IntMatrix& m, const Int& k) {
  int n = m.rows();
  Int d = abs(det(m));
  REQUIRE(d > 0);
  RatMatrix minv = inverse_rational(m);
  Int hits = 0;
  std::vector<Int> x(static_cast<size_t>(n), Int(0));
  for (;;) {
    // k * x in m Z^n ?
    bool in = true;
    for (int i = 0; i < n && in; ++i) {
      Rat acc = 0;
      for (int j = 0; j < n; ++j)
        acc += minv(i, j) * Rat(k * x[static_cast<size_t>(j)]);
      if (acc.get_den() != 1) in = false;
    }
    if (in) hits += 1;
    int i = n;
    bool done = true;
    while (i > 0) {
      --i;
      x[static_cast<size_t>(i)] += 1;
      if (x[static_cast<size_t>(i)] < d) {
        done = false;
        break;
      }
      x[static_cast<size_t>(i)] = 0;
    }
    if (done) break;
  }
  Int per_class = 1;
  for (int i = 0; i + 1 < n; ++i) per_class *= d;
  REQUIRE(hits % per_class == 0);
  return hits / per_class;
}

// Oracle: column-style Hermite reduction by repeated Euclidean steps; no
// divisibility chain, no transform bookkeeping -- deliberately a different
// algorithm from the code under test. Returns a column basis of the span.
IntMatrix hermite_basis(IntMatrix a) {
  int rows = a.rows(), cols = a.cols();
  int row = 0, col = 0;
  while (row < rows && col < cols) {
    // Clear row `row` to a single nonzero entry at `col` by gcd steps.
    for (;;) {
      int nz = -1;
      for (int j = col; j < cols; ++j)
        if (a(row, j) != 0) {
          if (nz < 0 || abs(a(row, j)) < abs(a(row, nz))) nz = j;
        }
      if (nz < 0) break;
      for (int j = 0; j < rows; ++j) std::swap(a(j, col), a(j, nz));
      bool clean = true;
      for (int j = col + 1; j < cols; ++j) {
        if (a(row, j) == 0) continue;
        Int q = a(row, j) / a(row, col);
        for (int i = 0; i < rows; ++i) a(i, j) -= q * a(i, col);
        if (a(row, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(row, col) != 0) ++col;
    ++row;
  }
  IntMatrix b(rows, col);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < col; ++j) b(i, j) = a(i, j);
  return b;
}

}  // namespace

TEST_CASE("smith normal form: identity and pinned diagonal example") {
  SmithDecomposition s = smith_decompose(IntMatrix::identity(2));
  CHECK(s.U == IntMatrix::identity(2));
  CHECK(s.D == IntMatrix::identity(2));
  CHECK(s.V == IntMatrix::identity(2));

  SmithDecomposition t = smith_decompose(IntMatrix{{Int(2), Int(0)},
                                                   {Int(0), Int(3)}});
  CHECK(t.D(0, 0) == 1);
  CHECK(t.D(1, 1) == 6);
  CHECK(t.U * IntMatrix{{Int(2), Int(0)}, {Int(0), Int(3)}} * t.V == t.D);
}

TEST_CASE("smith normal form: random matrices satisfy the contract") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
    SmithDecomposition s = smith_decompose(m);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    CHECK(s.U * m * s.V == s.D);
    int k = std::min(rows, cols);
    for (int i = 0; i < k; ++i) {
      CHECK(s.D(i, i) >= 0);
      if (i + 1 < k && s.D(i + 1, i + 1) != 0) {
        if (s.D(i, i) == 0) {
          CHECK(s.D(i + 1, i + 1) == 0);
        } else {
          CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
        }
      }
    }
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
  }
}

TEST_CASE("smith normal form is deterministic") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3, -9, 9);
    SmithDecomposition a = smith_decompose(m);
    SmithDecomposition b = smith_decompose(m);
    CHECK(a.U == b.U);
    CHECK(a.D == b.D);
    CHECK(a.V == b.V);
  }
}

TEST_CASE("lattice membership agrees with rational solving") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix b = random_matrix(rng, 3, 2, -3, 3);
    IntVec x = {Int(rng() % 7) - 3, Int(rng() % 7) - 3, Int(rng() % 7) - 3};
    // Oracle: search small integer combinations of the two columns.
    bool oracle = false;
    for (Int a1 = -40; a1 <= 40 && !oracle; ++a1)
      for (Int a2 = -40; a2 <= 40 && !oracle; ++a2) {
        bool eq = true;
        for (int i = 0; i < 3; ++i)
          if (a1 * b(i, 0) + a2 * b(i, 1) != x[static_cast<size_t>(i)])
            eq = false;
        if (eq) oracle = true;
      }
    // The box is wide enough: any solution of a 3x2 system with entries
    // bounded by 3 and rhs bounded by 3 has coefficients within the box
    // whenever the columns are independent; the dependent cases that slip
    // through are re-checked in the forward direction only.
    if (oracle) CHECK(lattice_contains(b, x));
    if (lattice_contains(b, x)) {
      // forward check: reconstruct a witness by brute force
      CHECK(oracle);
    }
  }
}

TEST_CASE("cokernel invariant factors match order statistics") {
  std::mt19937 rng(9001);
  int tested = 0;
  while (tested < 40) {
    int n = 2 + static_cast<int>(rng() % 2);
    IntMatrix m = random_matrix(rng, n, n, -3, 3);
    Int d = abs(det(m));
    if (d == 0 || d > 16) continue;
    ++tested;
    FiniteAbelianGroup g = cokernel_group(m);
    CHECK(g.order() == d);
    // Order statistics determine a finite abelian group uniquely.
    for (Int k = 1; k <= 6; ++k) {
      Int expect = 1;
      for (const Int& di : g.invariant_factors()) expect *= gcd(di, k);
      CHECK(order_statistic_oracle(m, k) == expect);
    }
  }
}

TEST_CASE("cokernel rejects singular input") {
  IntMatrix z(2, 2);
  CHECK_THROWS_AS(cokernel_group(z), SingularMatrix);
  CHECK_THROWS_AS(cokernel_group(IntMatrix{{Int(1), Int(2)},
                                           {Int(2), Int(4)}}),
                  SingularMatrix);
}

TEST_CASE("generator lifts and coordinates are mutually inverse") {
  std::mt19937 rng(31337);
  int tested = 0;
  while (tested < 60) {
    int n = 2 + static_cast<int>(rng() % 3);
    IntMatrix m = random_matrix(rng, n, n, -4, 4);
    if (det(m) == 0) continue;
    ++tested;
    FiniteAbelianGroup g = cokernel_group(m);
    for (int j = 0; j < g.num_generators(); ++j) {
      std::vector<Int> c = g.coords_of(g.generator_lift(j));
      for (int i = 0; i < g.num_generators(); ++i)
        CHECK(c[static_cast<size_t>(i)] == (i == j ? 1 : 0));
    }
    // Additivity of coordinates.
    IntVec x = random_matrix(rng, n, 1, -9, 9).flat();
    IntVec y = random_matrix(rng, n, 1, -9, 9).flat();
    IntVec xy(x.size());
    for (size_t i = 0; i < x.size(); ++i) xy[i] = x[i] + y[i];
    CHECK(g.coords_of(xy) == g.add(g.coords_of(x), g.coords_of(y)));
  }
}

TEST_CASE("torsion quotient: pinned example and stability check") {
  // Z^2 modulo the span of (1,-1) and (1,1), identity endomorphism: the
  // sublattice has index 2, so the quotient is Z/2.
  std::vector<IntVec> sub = {{Int(1), Int(-1)}, {Int(1), Int(1)}};
  FiniteAbelianGroup g = torsion_quotient(2, sub, IntMatrix::identity(2));
  REQUIRE(g.num_generators() == 1);
  CHECK(g.invariant_factors()[0] == 2);
  // The class of (1,0) generates.
  std::vector<Int> c = g.coords_of({Int(1), Int(0)});
  CHECK(c[0] == 1);

  // A 90-degree rotation does not stabilize the axis sublattice spanned by
  // (1,0) -- the quotient would not inherit the endomorphism.
  IntMatrix rot{{Int(0), Int(-1)}, {Int(1), Int(0)}};
  std::vector<IntVec> axis = {{Int(1), Int(0)}};
  CHECK_THROWS_AS(torsion_quotient(2, axis, rot), NotStable);
}

TEST_CASE("torsion quotient of a full-rank relation lattice matches Hermite "
          "order statistics") {
  std::mt19937 rng(5150);
  int tested = 0;
  while (tested < 30) {
    int n = 2 + static_cast<int>(rng() % 2);
    // Random sublattice of rank n plus an endomorphism that stabilizes it:
    // scalar endomorphisms always do.
    IntMatrix b = random_matrix(rng, n, n, -3, 3);
    if (det(b) == 0) continue;
    Int scalar = Int(rng() % 3) - 1;
    IntMatrix endo = scalar * IntMatrix::identity(n);
    std::vector<IntVec> sub;
    for (int j = 0; j < n; ++j) {
      IntVec col(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = b(i, j);
      sub.push_back(col);
    }
    FiniteAbelianGroup g = torsion_quotient(n, sub, endo);
    // Independent route: Hermite basis of [b | 1-endo], then order
    // statistics over the residue box.
    IntMatrix rel = hconcat(b, IntMatrix::identity(n) - endo);
    IntMatrix h = hermite_basis(rel);
    REQUIRE(h.cols() == n);  // b alone is full rank
    Int d = abs(det(h));
    if (d > 16) continue;
    ++tested;
    CHECK(g.order() == d);
    for (Int k = 1; k <= 4; ++k) {
      Int expect = 1;
      for (const Int& di : g.invariant_factors()) expect *= gcd(di, k);
      CHECK(order_statistic_oracle(h, k) == expect);
    }
  }
}

TEST_CASE("torsion quotient with free directions keeps only torsion") {
  // Sublattice spanned by (2,0) inside Z^2 with identity endomorphism: the
  // quotient is Z/2 x Z; only the Z/2 survives.
  std::vector<IntVec> sub = {{Int(2), Int(0)}};
  FiniteAbelianGroup g = torsion_quotient(2, sub, IntMatrix::identity(2));
  REQUIRE(g.num_generators() == 1);
  CHECK(g.invariant_factors()[0] == 2);
  CHECK(g.class_is_torsion({Int(1), Int(0)}));
  CHECK(!g.class_is_torsion({Int(0), Int(1)}));

  // Same sublattice, sign-flip endomorphism on the second coordinate:
  // (1 - endo) contributes (0,2), so the quotient is Z/2 x Z/2.
  IntMatrix flip{{Int(1), Int(0)}, {Int(0), Int(-1)}};
  FiniteAbelianGroup g2 = torsion_quotient(2, sub, flip);
  REQUIRE(g2.num_generators() == 2);
  CHECK(g2.invariant_factors()[0] == 2);
  CHECK(g2.invariant_factors()[1] == 2);
}

TEST_CASE("rational solve round-trips") {
  std::mt19937 rng(2718);
  int tested = 0;
  while (tested < 60) {
    int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix m = random_matrix(rng, n, n, -6, 6);
    if (det(m) == 0) continue;
    ++tested;
    RatVec b(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      Rat r(Int(rng() % 13) - 6, Int(1 + rng() % 4));
      r.canonicalize();
      b[static_cast<size_t>(i)] = r;
    }
    RatVec x = solve_rational(m, b);
    for (int i = 0; i < n; ++i) {
      Rat acc = 0;
      for (int j = 0; j < n; ++j)
        acc += Rat(m(i, j)) * x[static_cast<size_t>(j)];
      CHECK(acc == b[static_cast<size_t>(i)]);
    }
  }
}

TEST_CASE("unimodular inverse and dual action") {
  IntMatrix w{{Int(0), Int(-1)}, {Int(1), Int(0)}};
  IntMatrix winv = inverse_unimodular(w);
  CHECK(w * winv == IntMatrix::identity(2));
  // dual action = transpose of inverse
  CHECK(dual_action(w) == transpose(winv));
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{Int(2), Int(0)},
                                               {Int(0), Int(1)}}),
                  SingularMatrix);
}

TEST_CASE("Q/Z vectors reduce, order, and act exactly") {
  QmodZVector s(RatVec{Rat(7, 2), Rat(-1, 3)});
  CHECK(s[0] == Rat(1, 2));
  CHECK(s[1] == Rat(2, 3));
  CHECK(s.order() == 6);
  CHECK(s.order_coprime_to({Int(5)}));
  CHECK(!s.order_coprime_to({Int(2)}));

  IntMatrix m{{Int(1), Int(1)}, {Int(0), Int(1)}};
  QmodZVector ms = apply(m, s);
  CHECK(ms[0] == Rat(1, 6));  // 1/2 + 2/3 = 7/6 = 1/6 mod 1
  CHECK(ms[1] == Rat(2, 3));

  CHECK(scale(Int(3), s)[0] == Rat(1, 2));
  CHECK(scale(Int(3), s)[1] == 0);
  CHECK((s + (-s)).is_zero());

  CHECK(pairs_to_integer(s, {Int(2), Int(3)}));   // 1 + 2 = 3
  CHECK(!pairs_to_integer(s, {Int(1), Int(0)}));  // 1/2
}

TEST_CASE("abelian element enumeration is deterministic mixed-radix") {
  IntMatrix m{{Int(2), Int(0)}, {Int(0), Int(4)}};
  FiniteAbelianGroup g = cokernel_group(m);
  auto elems = g.elements();
  CHECK(elems.size() == 8);
  CHECK(elems.front() == std::vector<Int>{Int(0), Int(0)});
  CHECK(elems[1].back() == 1);  // last coordinate advances first
  CHECK(elems.back() == std::vector<Int>{Int(1), Int(3)});
}
