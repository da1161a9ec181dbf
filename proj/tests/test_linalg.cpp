#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include "polytoric/linalg.hpp"
#include "support.hpp"

using namespace polytoric;
using boost::multiprecision::cpp_int;

using testsupport::is_hermite_shape;
using testsupport::minor_gcd;

namespace {

cpp_int abs_big(cpp_int x) { return x < 0 ? -x : x; }

}  // namespace

TEST_CASE("hnf on knowns", "[linalg]") {
  IntMatrix A = IntMatrix::from_rows({{2, 4}, {1, 3}});
  HermiteForm h = hnf(A);
  CHECK(h.rank == 2);
  CHECK(h.H.at(0, 0) == 1);
  CHECK(h.H.at(1, 0) == 0);
  CHECK(is_hermite_shape(h.H));
  CHECK(mat_mul(h.U, A).a == h.H.a);
  CHECK(is_unimodular(h.U));
}

TEST_CASE("snf on knowns", "[linalg]") {
  // diag(2, 6) is already Smith; diag(6, 2) must re-chain to (2, 6).
  SmithDecomposition d = snf(IntMatrix::from_rows({{6, 0}, {0, 2}}));
  CHECK(d.invariant_factors == IntVector{2, 6});

  // The cokernel of multiplication by [[2,1],[0,2]] on Z^2 is Z/4.
  SmithDecomposition e = snf(IntMatrix::from_rows({{2, 1}, {0, 2}}));
  CHECK(e.invariant_factors == IntVector{1, 4});

  CHECK(snf(IntMatrix(3, 2)).rank == 0);
}

TEST_CASE("hnf matches the elementary-operation oracle on random matrices", "[linalg][property]") {
  auto g = testsupport::rng(20260814);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix A = testsupport::random_matrix(g, dim(g), dim(g), -9, 9);
    HermiteForm h = hnf(A);
    REQUIRE(h.H.rows == A.rows);
    REQUIRE(h.H.cols == A.cols);
    CHECK(is_hermite_shape(h.H));
    CHECK(is_unimodular(h.U));
    CHECK(mat_mul(h.U, A).a == h.H.a);
    CHECK(h.rank == rank_of(A));
  }
}

TEST_CASE("hnf is invariant under left unimodular action", "[linalg][property]") {
  auto g = testsupport::rng(41);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix A = testsupport::random_matrix(g, dim(g), dim(g), -9, 9);
    IntMatrix E = testsupport::random_unimodular(g, A.rows);
    CHECK(hnf(A).H.a == hnf(mat_mul(E, A)).H.a);
  }
}

TEST_CASE("snf matches the gcd-of-minors and elementary-operation oracles", "[linalg][property]") {
  auto g = testsupport::rng(20260815);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    IntMatrix A = testsupport::random_matrix(g, dim(g), dim(g), -9, 9);
    SmithDecomposition d = snf(A);

    CHECK(is_unimodular(d.U));
    CHECK(is_unimodular(d.V));
    CHECK(mat_mul(mat_mul(d.U, A), d.V).a == d.S.a);

    // Diagonal, nonnegative, divisibility chain, zeros only at the tail.
    int n = std::min(A.rows, A.cols);
    REQUIRE(static_cast<int>(d.invariant_factors.size()) == n);
    for (int i = 0; i < d.S.rows; ++i)
      for (int j = 0; j < d.S.cols; ++j)
        if (i != j) CHECK(d.S.at(i, j) == 0);
    for (int i = 0; i < n; ++i) {
      CHECK(d.invariant_factors[i] >= 0);
      CHECK(d.S.at(i, i) == d.invariant_factors[i]);
      if (i + 1 < n && d.invariant_factors[i + 1] != 0)
        CHECK(d.invariant_factors[i + 1] % std::max<Int>(d.invariant_factors[i], 1) == 0);
      if (d.invariant_factors[i] == 0 && i + 1 < n) CHECK(d.invariant_factors[i + 1] == 0);
    }

    // d1 * ... * dk equals the gcd of all k x k minors.
    cpp_int prod = 1;
    for (int k = 1; k <= n; ++k) {
      prod *= d.invariant_factors[k - 1];
      CHECK(prod == minor_gcd(A, k));
    }
  }
}

TEST_CASE("solve_integral and kernel_basis", "[linalg]") {
  IntMatrix A = IntMatrix::from_rows({{2, 4}, {1, 3}});
  auto x = solve_integral(A, {2, 2});
  REQUIRE(x.has_value());
  CHECK(mat_vec(A, *x) == IntVector{2, 2});

  // 2x = 1 has no integral solution.
  CHECK_FALSE(solve_integral(IntMatrix::from_rows({{2}}), {1}).has_value());

  auto K = kernel_basis(IntMatrix::from_rows({{1, 2, 3}}));
  REQUIRE(K.size() == 2);
  for (const auto& v : K) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("solve_integral agrees with direct substitution on randoms", "[linalg][property]") {
  auto g = testsupport::rng(99);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<Int> pick(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = dim(g), cols = dim(g);
    IntMatrix A = testsupport::random_matrix(g, rows, cols, -6, 6);
    IntVector x0(cols);
    for (auto& v : x0) v = pick(g);
    IntVector b = mat_vec(A, x0);
    auto x = solve_integral(A, b);
    REQUIRE(x.has_value());
    CHECK(mat_vec(A, *x) == b);
  }
}

TEST_CASE("cokernel invariants", "[linalg]") {
  // Z^2 / span{(2,0),(0,2)} = (Z/2)^2.
  CHECK(cokernel_invariants(IntMatrix::from_rows({{2, 0}, {0, 2}})).torsion == IntVector{2, 2});
  // Z^2 / span{(1,0)} is free of rank 1.
  CokernelInvariants c = cokernel_invariants(IntMatrix::from_columns({{1, 0}}));
  CHECK(c.torsion.empty());
  CHECK(c.free_rank == 1);
  CHECK(cokernel_invariants(IntMatrix::identity(3)).trivial());
}

TEST_CASE("determinant and unimodularity", "[linalg]") {
  CHECK(determinant_big(IntMatrix::from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(is_unimodular(IntMatrix::from_rows({{1, 1}, {0, 1}})));
  CHECK_FALSE(is_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})));
  auto g = testsupport::rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix U = testsupport::random_unimodular(g, 4);
    CHECK(is_unimodular(U));
    CHECK(abs_big(determinant_big(U)) == 1);
  }
}
