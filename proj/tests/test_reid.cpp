#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "polytoric/reid.hpp"

using namespace polytoric;

TEST_CASE("table shape", "[reid]") {
  const auto& table = reid_table();
  REQUIRE(table.size() == 95);
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(table[i].number == static_cast<int>(i) + 1);
    CHECK(table[i].weights.size() == 4);
    CHECK_FALSE(table[i].picard_label.empty());
    CHECK(table[i].external_index >= 0);  // entry 52 carries index 0
    CHECK_NOTHROW(table[i].weight_system());
  }
}

TEST_CASE("all 95 weight systems verify", "[reid][slow]") {
  ReidVerification rep = verify_reid();
  REQUIRE(rep.rows.size() == 95);
  CHECK(rep.not_reflexive.empty());
  CHECK(rep.not_quasismooth.empty());
  // The hypersurface ring is Gorenstein exactly when every weight divides
  // the degree, which holds for the first fourteen entries and no others.
  std::vector<int> first14;
  for (int i = 1; i <= 14; ++i) first14.push_back(i);
  CHECK(rep.gorenstein == first14);
  CHECK(rep.all_ok());
}

TEST_CASE("gorenstein entries have reflexive nabla with delta as its polar", "[reid][slow]") {
  for (int n = 1; n <= 14; ++n) {
    const ReidEntry& e = reid_table()[static_cast<std::size_t>(n - 1)];
    LatticePolytope nab = nabla(wps_fan(e.weight_system()));
    CHECK(nab.is_reflexive());
    CHECK(nab.polar_lattice_hull() == reid_delta(e));
    CHECK(reid_delta(e).polar_lattice_hull() == nab);
  }
}

TEST_CASE("classification yields 81 classes", "[reid][slow]") {
  ReidClassification cls = classify_reid();
  CHECK(cls.classes.size() == 81);

  int covered = 0;
  for (const auto& c : cls.classes) covered += static_cast<int>(c.size());
  CHECK(covered == 95);

  // Members of one class share every isomorphism invariant; lattice point
  // and vertex counts are cheap necessary conditions checked independently.
  for (const auto& c : cls.classes) {
    LatticePolytope first = reid_delta(reid_table()[static_cast<std::size_t>(c.front() - 1)]);
    for (std::size_t k = 1; k < c.size(); ++k) {
      LatticePolytope other = reid_delta(reid_table()[static_cast<std::size_t>(c[k] - 1)]);
      CHECK(first.lattice_points().size() == other.lattice_points().size());
      CHECK(first.vertices().size() == other.vertices().size());
    }
  }
}

TEST_CASE("duplicate groups", "[reid][slow]") {
  ReidClassification cls = classify_reid();
  auto groups = cls.duplicate_groups();
  REQUIRE(groups.size() == 10);

  // Entries 39 and 77 have 21 lattice points each and identical normal
  // forms; entry 38 has 24 lattice points, so no unimodular map can relate
  // it to 77.  The computed grouping is forced by these invariants.
  std::set<std::vector<int>> got(groups.begin(), groups.end());
  std::set<std::vector<int>> want = {{14, 28, 45, 51}, {20, 59}, {26, 34}, {27, 49}, {39, 77},
                                     {43, 48}, {46, 65, 80}, {50, 82}, {56, 73}, {68, 83, 92}};
  CHECK(got == want);

  CHECK(reid_delta(reid_table()[37]).lattice_points().size() == 24);
  CHECK(reid_delta(reid_table()[38]).lattice_points().size() == 21);
  CHECK(reid_delta(reid_table()[76]).lattice_points().size() == 21);
}

TEST_CASE("classification lookup by digest", "[reid][slow]") {
  ReidClassification cls = classify_reid();
  // Entry 1 is the quartic in ordinary projective 3-space.
  std::string digest = normal_form(reid_delta(reid_table()[0])).digest;
  int id = cls.class_of(digest);
  REQUIRE(id >= 0);
  CHECK(cls.classes[static_cast<std::size_t>(id)] == std::vector<int>{1});
  CHECK(cls.class_of("not a digest") == -1);
}

TEST_CASE("classification is stable under table order", "[reid][slow]") {
  // Grouping by canonical digest cannot depend on enumeration order; check
  // by regrouping from a reversed scan.
  std::map<std::string, std::set<int>> reversed;
  const auto& table = reid_table();
  for (auto it = table.rbegin(); it != table.rend(); ++it)
    reversed[normal_form(reid_delta(*it)).digest].insert(it->number);
  ReidClassification cls = classify_reid();
  REQUIRE(reversed.size() == cls.classes.size());
  for (const auto& c : cls.classes) {
    std::string digest = normal_form(reid_delta(table[static_cast<std::size_t>(c.front() - 1)])).digest;
    std::set<int> want(c.begin(), c.end());
    CHECK(reversed.at(digest) == want);
  }
}
