#include <cassert>
#include <iostream>

#include <chrono>
#include <set>

#include "polytoric/enumeration.hpp"
#include "polytoric/mirrors.hpp"
#include "polytoric/reid.hpp"

using namespace polytoric;

int main() {
  // hnf frozen example
  auto h = hnf(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  assert((h.H == IntMatrix::from_rows({{2, 0}, {0, 4}})));
  assert(is_unimodular(h.U));
  // snf frozen example
  auto s = snf(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  assert((s.invariant_factors == IntVector{1, 6}));
  assert((mat_mul(mat_mul(s.U, IntMatrix::from_rows({{2, 0}, {0, 3}})), s.V) == s.S));

  // quartic polytope: polar hull of the P3 simplex
  LatticePolytope simplex = LatticePolytope::hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  assert(simplex.is_reflexive());
  LatticePolytope quartic = simplex.polar_lattice_hull();
  std::cout << "quartic vertices " << quartic.vertices().size() << " points " << quartic.lattice_points().size()
            << " reflexive " << quartic.is_reflexive() << "\n";
  assert(quartic.vertices().size() == 4);
  assert(quartic.lattice_points().size() == 35);
  assert(quartic.is_reflexive());
  assert(quartic.interior_lattice_points().size() == 1);

  // normal form stable under a unimodular change of basis
  LatticePolytope tri = LatticePolytope::hull({{1, 0}, {0, 1}, {-1, -1}});
  auto nf1 = normal_form(tri);
  LatticePolytope tri2 = LatticePolytope::hull({{1, 2}, {3, 7}, {-4, -9}});  // image under [[1,2],[3,7]]
  auto nf2 = normal_form(tri2);
  assert(nf1.digest == nf2.digest);
  assert(lattice_isomorphic(tri, tri2));

  // P2 fan: complete, simplicial; star subdivision at e1+e2
  Fan p2 = face_fan(tri);
  assert(is_complete(p2) && is_simplicial(p2));
  Fan sub = star_subdivision(p2, {1, 1});
  assert(sub.rays().size() == 4 && sub.max_cones().size() == 4);
  assert(is_complete(sub) && is_simplicial(sub));
  assert(same_fan(star_subdivision(sub, {1, 1}), sub));

  // cube face fan: complete, not simplicial; simplicialize keeps rays
  std::vector<IntVector> cube;
  for (int a = -1; a <= 1; a += 2)
    for (int b = -1; b <= 1; b += 2)
      for (int c = -1; c <= 1; c += 2) cube.push_back({a, b, c});
  Fan cubefan = face_fan(LatticePolytope::hull(cube));
  assert(is_complete(cubefan) && !is_simplicial(cubefan));
  Fan simp = simplicialize(cubefan);
  assert(is_complete(simp) && is_simplicial(simp));
  assert(simp.rays().size() == 8);
  assert(nabla(simp) == nabla(cubefan));

  // star_resolution on P2 with Delta = conv{(-1,-1),(2,-1),(-1,2)}
  Fan res = star_resolution(p2, LatticePolytope::hull({{-1, -1}, {2, -1}, {-1, 2}}));
  LatticePolytope dual = LatticePolytope::hull({{-1, -1}, {2, -1}, {-1, 2}}).polar_lattice_hull();
  assert(nabla(res) == dual);
  std::cout << "resolution rays " << res.rays().size() << " cones " << res.max_cones().size() << "\n";
  assert(is_complete(res) && is_simplicial(res));

  // weighted projective fans
  auto p3w = wps_fan_data(WeightSystem::make({1, 1, 1, 1}));
  assert(is_complete(p3w.fan) && is_simplicial(p3w.fan));
  assert((p3w.multiplicities == IntVector{1, 1, 1, 1}));
  {
    IntVector acc(3, 0);
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < 3; ++r) acc[r] += p3w.ws.weights[i] * p3w.multiplicities[i] * p3w.fan.rays()[i][r];
    assert(is_zero(acc));
  }
  assert(anticanonical_points(p3w.fan).size() == 35);
  auto w1122 = wps_fan_data(WeightSystem::make({1, 1, 2, 2}));
  {
    IntVector acc(3, 0);
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < 3; ++r) acc[r] += w1122.ws.weights[i] * w1122.multiplicities[i] * w1122.fan.rays()[i][r];
    assert(is_zero(acc));
  }
  assert(anticanonical_points(wps_fan(WeightSystem::make({1, 1, 1, 3}))).size() == 39);

  // dictionary on the standard P3 fan (w-ray last)
  Fan p3 = face_fan(simplex);
  std::cout << "exponents(-1,-1,-1): " << vec_to_string(exponents({-1, -1, -1}, p3)) << "\n";
  MonomialSet anti = anticanonical_points(p3);
  for (const auto& m : anti.points()) assert(point_of_exponents(exponents(m, p3), p3) == m);

  // quasismoothness criterion
  assert(is_quasismooth(anti).quasismooth);
  auto bad = is_quasismooth(MonomialSet::make(p3, {{0, 0, 0}}));
  assert(!bad.quasismooth && bad.violating.size() == 1);
  assert(common_variable(MonomialSet::make(p3, {{0, 0, 0}})).has_value());
  assert(!common_variable(anti).has_value());
  assert(is_gorenstein(WeightSystem::make({1, 6, 14, 21})));
  assert(!is_gorenstein(WeightSystem::make({3, 3, 4, 5})));

  // mirrors
  std::vector<IntVector> cross = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  assert(resolution_polytope(cross) == LatticePolytope::hull(cube));

  auto fermat2 = BHKMatrix::make(IntMatrix::from_rows({{4, 0}, {0, 4}}));
  auto bw = bhk_weights(fermat2);
  assert((bw.ws.weights == IntVector{1, 1}) && bw.degree == 4 && !bw.calabi_yau);
  auto loop2 = bhk_weights(BHKMatrix::make(IntMatrix::from_rows({{3, 1}, {1, 3}})));
  assert((loop2.ws.weights == IntVector{1, 1}) && loop2.degree == 4 && !loop2.calabi_yau);
  IntMatrix f5(5, 5);
  for (int i = 0; i < 5; ++i) f5.at(i, i) = 5;
  auto quintic = bhk_weights(BHKMatrix::make(f5));
  assert((quintic.ws.weights == IntVector{1, 1, 1, 1, 1}) && quintic.degree == 5 && quintic.calabi_yau);
  assert((bhk_dual_group(BHKMatrix::make(f5)) == IntVector{5, 5, 5}));
  IntMatrix f3(3, 3);
  for (int i = 0; i < 3; ++i) f3.at(i, i) = 3;
  assert((bhk_dual_group(BHKMatrix::make(f3)) == IntVector{3}));

  // clarke involution on P3 with Xi = vertices of the quartic polytope plus origin
  std::vector<IntVector> xi = quartic.vertices();
  xi.push_back({0, 0, 0});
  auto md = clarke_mirror(p3, xi);
  assert(md.dropped_origin && !md.primitivized);
  auto md2 = clarke_mirror(fan_spanning(md.mirror_rays), md.mirror_monomials);
  std::vector<IntVector> p3rays = p3.rays();
  std::sort(p3rays.begin(), p3rays.end(), lex_less);
  assert(md2.mirror_rays == p3rays);
  assert(md2.mirror_monomials == md.mirror_rays);

  auto ew = equivalence_witness(p3, p3, xi, true);
  assert(ew.common_polytope.is_reflexive());

  // reid pipeline
  assert(reid_table().size() == 95);
  assert((reid_table()[0].weights == IntVector{1, 1, 1, 1}) && reid_table()[0].external_index == 4311);
  assert(reid_table()[51].number == 52 && reid_table()[51].picard_label == "(E8)^2 + <-4> + U");
  auto rep = verify_reid();
  std::cout << "reid verify: reflexive fails " << rep.not_reflexive.size() << ", qs fails "
            << rep.not_quasismooth.size() << ", gorenstein " << rep.gorenstein.size() << "\n";
  assert(rep.all_ok());
  auto cls = classify_reid();
  std::cout << "reid classes: " << cls.classes.size() << ", duplicate groups " << cls.duplicate_groups().size()
            << "\n";
  for (const auto& g : cls.duplicate_groups()) {
    std::cout << "  {";
    for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
    std::cout << "}";
  }
  std::cout << "\n";
  assert(cls.classes.size() == 81);
  assert(cls.duplicate_groups().size() == 10);

  // enumeration: children examples
  {
    LatticePolytope seg = LatticePolytope::hull({{-1}, {1}});
    auto ch = seg.subpolytope_children();
    assert(ch.size() == 2 && ch[0].dim() == 1 && ch[1].dim() == 1);
    assert(ch[0].lattice_points().size() == 2 && ch[0].subpolytope_children().size() == 2);
    LatticePolytope tri = LatticePolytope::hull({{0, 0}, {1, 0}, {0, 1}});
    assert(tri.subpolytope_children().size() == 3);
    LatticePolytope q = quartic_polytope();
    assert(q.lattice_points().size() == 35 && q.vertices().size() == 4 && q.is_reflexive());
    assert((q.interior_lattice_points() == std::vector<IntVector>{{0, 0, 0}}));
    assert(q.subpolytope_children().size() == 4);
  }

  // enumeration: 2-D analogue against the exhaustive subset oracle
  {
    LatticePolytope p2tri = LatticePolytope::hull({{1, 0}, {0, 1}, {-1, -1}});
    LatticePolytope anti = p2tri.polar_lattice_hull();
    const auto& pts = anti.lattice_points();
    assert(pts.size() == 10);

    auto autos = root_automorphisms(anti);
    std::cout << "2-D autos: " << autos.size() << "\n";
    std::set<std::vector<IntVector>> fixed;
    std::set<std::vector<IntVector>> oracle;
    for (unsigned s = 1; s < (1u << pts.size()); ++s) {
      std::vector<IntVector> sub;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (s >> i & 1) sub.push_back(pts[i]);
      LatticePolytope h = LatticePolytope::hull(sub);
      if (h.dim() != 2 || !h.has_interior_origin() || !h.is_reflexive()) continue;
      auto key = h.lattice_points();
      fixed.insert(key);
      oracle.insert(canonical_point_set(autos, key));
    }
    std::cout << "2-D fixed-coordinate hulls: " << fixed.size() << "\n";

    auto res = enumerate_reflexive_subpolytopes(anti);
    std::set<std::vector<IntVector>> mine;
    for (const auto& r : res.records) mine.insert(r.point_set);
    std::cout << "2-D analogue: dfs " << mine.size() << " hulls, oracle " << oracle.size() << "\n";
    assert(mine == oracle);

    EnumerationOptions par;
    par.jobs = 3;
    auto res3 = enumerate_reflexive_subpolytopes(anti, par);
    std::set<std::vector<IntVector>> mine3;
    for (const auto& r : res3.records) mine3.insert(r.point_set);
    assert(mine3 == mine && res3.distinct_classes == res.distinct_classes);
  }

  // enumeration: the full quartic run
  {
    auto t0 = std::chrono::steady_clock::now();
    auto res = enumerate_reflexive_subpolytopes(quartic_polytope());
    auto t1 = std::chrono::steady_clock::now();
    std::cout << "quartic: " << res.records.size() << " hulls, " << res.distinct_classes << " classes, "
              << res.nodes_explored << " nodes, "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
    std::cout << "quartic extra: " << res.lattice_hulls << " fixed hulls, " << res.embedded_systems
              << " systems, |Aut| " << res.root_symmetries << "\n";
    auto report = match_reid(res);
    std::cout << "match: " << report.matched_systems << " systems, " << report.matched_orbits
              << " orbits, " << report.matched_hulls << " hulls, " << report.matched_classes
              << " classes, " << report.covered_families.size() << " families, "
              << report.picard_labels.size() << " labels\n";

    // worked examples
    auto class_of_points = [&](std::vector<IntVector> xi) {
      return classify_reid().class_of(normal_form(LatticePolytope::hull(std::move(xi))).digest);
    };
    auto cls2 = classify_reid();
    int c0 = class_of_points({{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    int c88 = class_of_points({{-1, -1, -1}, {-1, -1, 0}, {0, 0, 0}, {-1, 1, 0}, {2, -1, 0}, {-1, -1, 1}});
    int c221 = class_of_points(
        {{-1, -1, -1}, {-1, -1, 0}, {0, 0, 0}, {-1, 1, 0}, {2, -1, 0}, {-1, -1, 1}, {0, -1, 1}});
    std::cout << "examples: ";
    for (int c : {c0, c88, c221}) {
      std::cout << "{";
      for (std::size_t i = 0; c >= 0 && i < cls2.classes[c].size(); ++i)
        std::cout << (i ? "," : "") << cls2.classes[c][i];
      std::cout << "} ";
    }
    std::cout << "\n";
  }

  std::cout << "smoke ok\n";
  return 0;
}
