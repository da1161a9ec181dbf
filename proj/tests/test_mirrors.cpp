#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "polytoric/mirrors.hpp"
#include "polytoric/reid.hpp"
#include "support.hpp"

using namespace polytoric;

namespace {

Fan p2_fan() { return wps_fan(WeightSystem::make({1, 1, 1})); }

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

// Random full-dimensional anticanonical subset of a fan: always contains
// enough monomials for the mirror fan to be complete.
std::vector<IntVector> random_subset(std::mt19937& g, const Fan& f) {
  MonomialSet all = anticanonical_points(f);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<IntVector> pick;
    for (const auto& m : all.points())
      if (coin(g)) pick.push_back(m);
    std::vector<IntVector> rays;
    for (const auto& m : pick)
      if (!is_zero(m)) rays.push_back(primitive(m));
    if (rays.size() < 3) continue;
    LatticePolytope hull = convex_hull(rays);
    if (hull.dim() == f.rank() && hull.has_interior_origin()) return pick;
  }
  return all.points();  // fallback: the full system always works
}

}  // namespace

TEST_CASE("resolution polytope of the quartic system", "[mirrors]") {
  Fan f = wps_fan(WeightSystem::make({1, 1, 1, 1}));
  LatticePolytope R = resolution_polytope(anticanonical_points(f).points());
  CHECK(R.dim() == 3);
  CHECK(R.has_interior_origin());
  CHECK(R.is_reflexive());
}

TEST_CASE("clarke mirror of the plane cubic", "[mirrors]") {
  Fan f = p2_fan();
  MirrorDatum m = clarke_mirror(f, anticanonical_points(f).points());
  // Mirror rays are the nonzero anticanonical points, primitivized; the
  // mirror monomials are the rays of the original fan.
  CHECK(m.mirror_monomials == sorted(f.rays()));
  CHECK_FALSE(m.primitivized);
  CHECK(m.dropped_origin);
  CHECK(m.mirror_rays.size() == 9);
  for (const auto& r : m.mirror_rays) CHECK_FALSE(is_zero(r));
}

TEST_CASE("clarke mirror is an involution", "[mirrors][property]") {
  auto g = testsupport::rng(20260817);
  std::vector<Fan> fans = {p2_fan(), wps_fan(WeightSystem::make({1, 1, 2})), wps_fan(WeightSystem::make({1, 1, 1, 1})),
                           wps_fan(WeightSystem::make({1, 1, 4, 6}))};
  for (const auto& f : fans) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<IntVector> Xi = random_subset(g, f);
      MirrorDatum m = clarke_mirror(f, Xi);
      Fan mirror_fan = fan_spanning(m.mirror_rays);
      MirrorDatum back = clarke_mirror(mirror_fan, m.mirror_monomials);
      // Applying the construction twice swaps the roles back: rays return to
      // the original fan's rays, monomials to the first mirror's rays.
      CHECK(back.mirror_rays == sorted(f.rays()));
      CHECK(back.mirror_monomials == sorted(mirror_fan.rays()));
    }
  }
}

TEST_CASE("clarke mirror rejects non-anticanonical input", "[mirrors]") {
  Fan f = p2_fan();
  CHECK_THROWS_AS(clarke_mirror(f, {{3, 0}}), std::invalid_argument);
  // A single boundary monomial cannot span a complete mirror fan.
  CHECK_THROWS_AS(clarke_mirror(f, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("bhk weights of the Fermat quintic", "[mirrors]") {
  IntMatrix A(5, 5);
  for (int i = 0; i < 5; ++i) A.at(i, i) = 5;
  BHKMatrix B = BHKMatrix::make(A);
  BHKWeights w = bhk_weights(B);
  CHECK(w.ws.weights == IntVector{1, 1, 1, 1, 1});
  CHECK(w.degree == 5);
  CHECK(w.calabi_yau);
  // Dual group: cokernel of the exponent lattice has invariants (5,5,5).
  CHECK(bhk_dual_group(B) == IntVector{5, 5, 5});
}

TEST_CASE("bhk weights solve the homogeneity system", "[mirrors][property]") {
  auto g = testsupport::rng(20260818);
  std::uniform_int_distribution<int> dim(2, 5);
  std::uniform_int_distribution<Int> entry(0, 4);
  int done = 0;
  while (done < 100) {
    int n = dim(g);
    IntMatrix A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = entry(g);
    BHKMatrix B{A};
    try {
      B = BHKMatrix::make(A);
    } catch (const std::invalid_argument&) {
      continue;  // singular draw
    }
    BHKWeights w;
    try {
      w = bhk_weights(B);
    } catch (const std::invalid_argument&) {
      continue;  // no positive solution: not weighted homogeneous
    }
    ++done;
    // A q = degree * (1,..,1) with gcd(q, degree) fully reduced.
    for (int i = 0; i < n; ++i) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s += A.at(i, j) * w.ws.weights[static_cast<std::size_t>(j)];
      CHECK(s == w.degree);
    }
    Int sum = 0;
    for (Int q : w.ws.weights) sum += q;
    CHECK(w.calabi_yau == (sum == w.degree));
  }
}

TEST_CASE("bhk transpose symmetry", "[mirrors][property]") {
  auto g = testsupport::rng(20260819);
  std::uniform_int_distribution<Int> entry(0, 4);
  int done = 0;
  while (done < 100) {
    IntMatrix A(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A.at(i, j) = entry(g);
    BHKMatrix B{A};
    try {
      B = BHKMatrix::make(A);
    } catch (const std::invalid_argument&) {
      continue;
    }
    bool cy = false, cyt = false;
    bool ok = true, okt = true;
    try {
      cy = bhk_weights(B).calabi_yau;
    } catch (const std::invalid_argument&) {
      ok = false;
    }
    try {
      cyt = bhk_weights(B.transposed()).calabi_yau;
    } catch (const std::invalid_argument&) {
      okt = false;
    }
    if (!ok || !okt) continue;
    ++done;
    CHECK(cy == cyt);
  }
}

TEST_CASE("bhk matrix validation", "[mirrors]") {
  CHECK_THROWS_AS(BHKMatrix::make(IntMatrix::from_rows({{1, 1}, {1, 1}})), std::invalid_argument);   // singular
  CHECK_THROWS_AS(BHKMatrix::make(IntMatrix::from_rows({{1, -1}, {0, 1}})), std::invalid_argument);  // negative
  CHECK_THROWS_AS(BHKMatrix::make(IntMatrix::from_rows({{1}})), std::invalid_argument);              // too small
}

TEST_CASE("equivalence witness on the plane", "[mirrors]") {
  Fan f = p2_fan();
  std::vector<IntVector> Xi = anticanonical_points(f).points();
  EquivalenceWitness w = equivalence_witness(f, f, Xi, true);
  CHECK(w.common_polytope.is_reflexive());
  CHECK(w.pairings.size() == 2 * Xi.size() * f.rays().size());
  CHECK(w.contained_rays.size() == 2 * f.rays().size());
  for (const auto& p : w.pairings) CHECK(p.value >= -1);
}

TEST_CASE("equivalence witness rejects deep pairings", "[mirrors]") {
  Fan f = p2_fan();
  CHECK_THROWS_AS(equivalence_witness(f, f, {{3, 0}}), std::invalid_argument);
  Fan g = wps_fan(WeightSystem::make({1, 1, 1, 1}));
  CHECK_THROWS_AS(equivalence_witness(f, g, {{0, 0}}), std::invalid_argument);
}
