#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "polytoric/enumeration.hpp"
#include "polytoric/normal_form.hpp"
#include "polytoric/reid.hpp"
#include "support.hpp"

using namespace polytoric;

namespace {

// Pool of reflexive polytopes across dimensions 2 and 3: every orbit
// representative of the reflexive subpolytopes of the anticanonical triangle
// of the projective plane, plus a spread of table polytopes.
std::vector<LatticePolytope> reflexive_pool() {
  std::vector<LatticePolytope> pool;
  LatticePolytope tri = LatticePolytope::hull({{2, -1}, {-1, 2}, {-1, -1}});
  EnumerationResult res = enumerate_reflexive_subpolytopes(tri);
  for (const auto& rec : res.records)
    pool.push_back(LatticePolytope::hull_with_points(rec.point_set, rec.point_set));
  for (int n : {1, 5, 10, 14, 20, 27, 34, 41, 48, 52, 56, 59, 65, 68, 73, 77, 80, 83, 88, 91, 92, 95})
    pool.push_back(reid_delta(reid_table()[static_cast<std::size_t>(n - 1)]));
  return pool;
}

}  // namespace

TEST_CASE("normal form is invariant under unimodular maps", "[normal_form][property]") {
  auto g = testsupport::rng(20260816);
  std::vector<LatticePolytope> pool = reflexive_pool();
  REQUIRE(pool.size() >= 40);
  for (const auto& P : pool) {
    NormalFormKey key = normal_form(P);
    for (int t = 0; t < 100; ++t) {
      IntMatrix U = testsupport::random_unimodular(g, P.ambient_dim());
      LatticePolytope Q = LatticePolytope::hull(testsupport::apply_to_points(U, P.vertices()));
      REQUIRE(normal_form(Q) == key);
    }
  }
}

TEST_CASE("normal form separates inequivalent polytopes", "[normal_form]") {
  LatticePolytope cube = LatticePolytope::hull(
      {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
  LatticePolytope cross =
      LatticePolytope::hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  LatticePolytope simplex = LatticePolytope::hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  CHECK(normal_form(cube) != normal_form(cross));
  CHECK(normal_form(cube) != normal_form(simplex));
  CHECK(normal_form(cross) != normal_form(simplex));
  CHECK(lattice_isomorphic(cube, cube));
  CHECK_FALSE(lattice_isomorphic(cube, cross));
}

TEST_CASE("canonical matrix lies in the same class", "[normal_form]") {
  for (const auto& P : reflexive_pool()) {
    NormalFormKey key = normal_form(P);
    std::vector<IntVector> cols;
    for (int j = 0; j < key.canonical_matrix.cols; ++j) {
      IntVector v(key.canonical_matrix.rows);
      for (int i = 0; i < key.canonical_matrix.rows; ++i) v[static_cast<std::size_t>(i)] = key.canonical_matrix.at(i, j);
      cols.push_back(std::move(v));
    }
    LatticePolytope Q = LatticePolytope::hull(cols);
    CHECK(Q.vertices().size() == P.vertices().size());
    CHECK(normal_form(Q) == key);
  }
}

TEST_CASE("normal form requires interior origin", "[normal_form]") {
  LatticePolytope shifted = LatticePolytope::hull({{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(normal_form(shifted), std::invalid_argument);
  LatticePolytope seg = LatticePolytope::hull({{-1, 0}, {1, 0}});
  CHECK_THROWS_AS(normal_form(seg), std::invalid_argument);
}

TEST_CASE("digest round trip", "[normal_form]") {
  LatticePolytope tri = LatticePolytope::hull({{2, -1}, {-1, 2}, {-1, -1}});
  NormalFormKey key = normal_form(tri);
  NormalFormKey back = key_from_digest(key.digest);
  CHECK(back == key);
  CHECK(back.canonical_matrix.a == key.canonical_matrix.a);
  CHECK(back.canonical_matrix.rows == key.canonical_matrix.rows);
  CHECK(back.canonical_matrix.cols == key.canonical_matrix.cols);
}

TEST_CASE("key_from_digest rejects malformed digests", "[normal_form]") {
  for (const char* bad : {"", "2x2", "x2:1,2,3,4", "2x:1,2", "2x2:1,2,3", "2x2:1,2,3,4,5", "ax2:1,2", "2x2:1,b,3,4"})
    CHECK_THROWS_AS(key_from_digest(bad), std::invalid_argument);
}

TEST_CASE("normal form digests are distinct across the 2-D orbit pool", "[normal_form]") {
  LatticePolytope tri = LatticePolytope::hull({{2, -1}, {-1, 2}, {-1, -1}});
  EnumerationResult res = enumerate_reflexive_subpolytopes(tri);
  // Orbit representatives under the triangle's own symmetries can still be
  // isomorphic as abstract polytopes, so distinct digests count classes.
  std::set<std::string> digests;
  for (const auto& rec : res.records) digests.insert(rec.nf.digest);
  CHECK(digests.size() == res.distinct_classes);
  CHECK(res.distinct_classes <= res.records.size());
}
