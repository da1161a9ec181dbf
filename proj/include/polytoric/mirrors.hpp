#pragma once

// Mirror constructions: resolution polytopes and equivalence witnesses for
// pairs of fans sharing a linear system, the ray/monomial exchange of the
// Clarke mirror, and transpose-matrix weights with their dual-group
// invariant factors.

#include "polytoric/toric.hpp"

namespace polytoric {

// Polar lattice hull of the hull of Xi; the nabla of any common partial
// resolution for fans compatible with Xi.
inline LatticePolytope resolution_polytope(const std::vector<IntVector>& Xi) {
  LatticePolytope P = convex_hull(Xi);
  if (P.dim() != P.ambient_dim() || !P.has_interior_origin())
    throw std::invalid_argument("resolution polytope requires the origin interior to Conv(Xi)");
  return P.polar_lattice_hull();
}

struct EquivalenceWitness {
  LatticePolytope common_polytope;  // shared nabla of the two partial resolutions

  // Pairing certificate: point of Xi against a ray of fan 1 or 2, value >= -1.
  struct Pairing {
    int fan;  // 1 or 2
    IntVector m;
    IntVector u;
    Int value;
  };
  std::vector<Pairing> pairings;

  // Hull certificate: (fan id, ray) pairs confirmed inside common_polytope.
  std::vector<std::pair<int, IntVector>> contained_rays;
};

// Verifies the hypotheses of the comparison theorem for two complete fans
// and a shared monomial set, returning the common resolution polytope with
// pairing certificates.  With materialize set, additionally builds both
// star resolutions and checks their nabla against the witness polytope.
inline EquivalenceWitness equivalence_witness(const Fan& f1, const Fan& f2, const std::vector<IntVector>& Xi,
                                              bool materialize = false) {
  if (f1.rank() != f2.rank()) throw std::invalid_argument("equivalence witness: rank mismatch");
  std::vector<EquivalenceWitness::Pairing> pairings;
  for (int which = 1; which <= 2; ++which) {
    const Fan& f = which == 1 ? f1 : f2;
    for (const auto& m : Xi)
      for (const auto& u : f.rays()) {
        Int v = dot(m, u);
        if (v < -1)
          throw std::invalid_argument("equivalence witness: pairing of " + vec_to_string(m) + " with ray " +
                                      vec_to_string(u) + " is " + std::to_string(v));
        pairings.push_back({which, m, u, v});
      }
  }
  EquivalenceWitness w{resolution_polytope(Xi), std::move(pairings), {}};
  for (int which = 1; which <= 2; ++which) {
    const Fan& f = which == 1 ? f1 : f2;
    for (const auto& u : f.rays()) {
      if (!w.common_polytope.contains(u))
        throw std::invalid_argument("equivalence witness: ray " + vec_to_string(u) + " outside the common polytope");
      w.contained_rays.push_back({which, u});
    }
  }
  if (materialize) {
    LatticePolytope Delta = convex_hull(Xi);
    for (const Fan* f : {&f1, &f2}) {
      Fan res = star_resolution(*f, Delta);
      if (!(nabla(res) == w.common_polytope)) throw std::logic_error("resolution polytope unreachable");
    }
  }
  return w;
}

struct MirrorDatum {
  std::vector<IntVector> mirror_rays;       // rays of the mirror fan, in M
  std::vector<IntVector> mirror_monomials;  // monomial set of the mirror, in N
  bool primitivized = false;                // some element of Xi needed rescaling
  bool dropped_origin = false;              // Xi contained the origin, unusable as a ray
};

// Ray/monomial exchange: the mirror fan lives on Xi and its linear system is
// read off the rays of F.
inline MirrorDatum clarke_mirror(const Fan& f, const std::vector<IntVector>& Xi) {
  MirrorDatum out;
  std::set<IntVector> rays;
  for (const auto& m : Xi) {
    for (const auto& u : f.rays())
      if (dot(m, u) < -1) throw std::invalid_argument("monomial outside the anticanonical polar");
    if (is_zero(m)) {
      out.dropped_origin = true;
      continue;
    }
    IntVector p = primitive(m);
    if (p != m) out.primitivized = true;
    rays.insert(std::move(p));
  }
  out.mirror_rays.assign(rays.begin(), rays.end());
  LatticePolytope hull = convex_hull(out.mirror_rays);
  if (hull.dim() != f.rank() || !hull.has_interior_origin()) throw std::invalid_argument("mirror fan not complete");
  out.mirror_monomials = f.rays();
  std::sort(out.mirror_monomials.begin(), out.mirror_monomials.end(), lex_less);
  return out;
}

struct BHKMatrix {
  IntMatrix A;

  static BHKMatrix make(IntMatrix M) {
    if (M.rows != M.cols || M.rows < 2) throw std::invalid_argument("BHK matrix must be square, size at least 2");
    for (int i = 0; i < M.rows; ++i)
      for (int j = 0; j < M.cols; ++j)
        if (M.at(i, j) < 0) throw std::invalid_argument("BHK matrix entries must be nonnegative");
    if (determinant_big(M) == 0) throw std::invalid_argument("BHK matrix must be invertible");
    return BHKMatrix{std::move(M)};
  }

  BHKMatrix transposed() const { return BHKMatrix{A.transposed()}; }
};

struct BHKWeights {
  WeightSystem ws;
  Int degree = 0;  // common degree d of the monomial rows
  bool calabi_yau = false;
};

// Unique primitive positive solution of A q = d (1,..,1): q is the adjugate
// row-sum vector up to sign and content.
inline BHKWeights bhk_weights(const BHKMatrix& B) {
  const int n = B.A.rows;
  BigInt det = determinant_big(B.A);
  std::vector<BigInt> q(n);
  for (int j = 0; j < n; ++j) {
    // Column j of the adjugate applied to (1,..,1): replace column j of A by
    // ones and take the determinant.
    IntMatrix M = B.A;
    for (int i = 0; i < n; ++i) M.at(i, j) = 1;
    q[j] = determinant_big(M);
  }
  if (det < 0)
    for (auto& x : q) x = -x;
  BigInt d = abs(det);
  BigInt g = d;
  for (const auto& x : q) {
    if (x <= 0) throw std::invalid_argument("not weighted homogeneous");
    g = boost::multiprecision::gcd(g, x);
  }
  BHKWeights out;
  IntVector w(n);
  BigInt sum = 0;
  for (int j = 0; j < n; ++j) {
    w[j] = detail::big_to_int(q[j] / g);
    sum += q[j] / g;
  }
  out.ws = WeightSystem::make(std::move(w));
  out.degree = detail::big_to_int(d / g);
  out.calabi_yau = sum == d / g;
  return out;
}

// Invariant factors (> 1) of M / Z-span(Xi_A), where Xi_A collects the rows
// of A read as anticanonical exponent vectors on the fan of P(q_A).
inline IntVector bhk_dual_group(const BHKMatrix& B) {
  BHKWeights w = bhk_weights(B);
  Fan f = wps_fan(w.ws);
  std::vector<IntVector> points;
  points.reserve(B.A.rows);
  for (int i = 0; i < B.A.rows; ++i) points.push_back(point_of_exponents(B.A.row(i), f));
  return cokernel_invariants(IntMatrix::from_columns(points)).torsion;
}

}  // namespace polytoric
