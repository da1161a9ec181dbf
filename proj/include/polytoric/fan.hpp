#pragma once

// Rational polyhedral fans, given by primitive ray generators and maximal
// cones as index sets.  Cone generator lists hold exactly the extreme rays.
// All fans manipulated here are pure and complete or on their way to being
// checked for it; operations validate what they rely on.

#include "polytoric/normal_form.hpp"

namespace polytoric {

struct Cone {
  std::vector<int> rays;  // sorted indices into Fan::rays()

  friend bool operator==(const Cone& a, const Cone& b) { return a.rays == b.rays; }
  friend bool operator<(const Cone& a, const Cone& b) { return a.rays < b.rays; }
};

// Facet of a full-dimensional cone: inward normal plus the generators lying
// on it.
struct ConeFacet {
  IntVector normal;
  std::vector<int> tight;  // ray indices of the parent cone on this facet
};

class Fan {
 public:
  static Fan make(int rank, std::vector<IntVector> rays, std::vector<Cone> max_cones) {
    Fan f;
    f.rank_ = rank;
    f.rays_ = std::move(rays);
    f.cones_ = std::move(max_cones);
    f.validate();
    return f;
  }

  int rank() const { return rank_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<Cone>& max_cones() const { return cones_; }

  int ray_index(const IntVector& v) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (rays_[i] == v) return static_cast<int>(i);
    return -1;
  }

  // Facets of a maximal cone by brute force over (rank-1)-subsets of its
  // generators.  Requires the cone to be full-dimensional.
  std::vector<ConeFacet> cone_facets(const Cone& c) const {
    const int d = rank_;
    std::vector<IntVector> gens;
    gens.reserve(c.rays.size());
    for (int i : c.rays) gens.push_back(rays_[i]);
    if (detail::rank_rows(gens, d) != d) throw std::invalid_argument("maximal cone is not full-dimensional");
    const int n = static_cast<int>(gens.size());
    std::set<IntVector> normals;
    if (d == 1) {
      normals.insert(gens[0][0] > 0 ? IntVector{1} : IntVector{-1});
    } else {
      std::vector<int> idx(d - 1);
      for (int i = 0; i < d - 1; ++i) idx[i] = i;
      std::vector<IntVector> rows(d - 1);
      while (true) {
        for (int i = 0; i < d - 1; ++i) rows[i] = gens[idx[i]];
        IntVector nvec = detail::cross_product(rows, d);
        if (!is_zero(nvec)) {
          nvec = primitive(nvec);
          bool below = false, above = false;
          for (int p = 0; p < n && !(below && above); ++p) {
            Int s = dot(nvec, gens[p]);
            if (s < 0) below = true;
            if (s > 0) above = true;
          }
          if (!above && !below) throw std::invalid_argument("degenerate cone");
          if (!below) normals.insert(nvec);
          else if (!above) normals.insert(vec_neg(nvec));
        }
        int k = d - 2;
        while (k >= 0 && idx[k] == n - (d - 1) + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < d - 1; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    std::vector<ConeFacet> out;
    for (const auto& nvec : normals) {
      ConeFacet f;
      f.normal = nvec;
      for (int i : c.rays)
        if (dot(nvec, rays_[i]) == 0) f.tight.push_back(i);
      out.push_back(std::move(f));
    }
    return out;
  }

  bool cone_contains(const Cone& c, const IntVector& v) const {
    for (const auto& f : cone_facets(c))
      if (dot(f.normal, v) < 0) return false;
    return true;
  }

  bool supports(const IntVector& v) const {
    for (const auto& c : cones_)
      if (cone_contains(c, v)) return true;
    return false;
  }

 private:
  void validate() const {
    if (rank_ < 1 || rank_ > 4) throw std::invalid_argument("fan rank must be between 1 and 4");
    const Int cap = detail::hull_coordinate_cap(rank_);
    std::set<IntVector> distinct;
    for (const auto& r : rays_) {
      if (static_cast<int>(r.size()) != rank_) throw std::invalid_argument("ray rank mismatch");
      for (Int x : r)
        if (x > cap || x < -cap) throw std::overflow_error("ray coordinates too large for this rank");
      if (is_zero(r) || primitive(r) != r) throw std::invalid_argument("rays must be primitive");
      if (!distinct.insert(r).second) throw std::invalid_argument("duplicate ray");
    }
    if (cones_.empty()) throw std::invalid_argument("fan needs at least one maximal cone");
    std::vector<char> used(rays_.size(), 0);
    for (const auto& c : cones_) {
      if (c.rays.empty()) throw std::invalid_argument("empty cone");
      if (!std::is_sorted(c.rays.begin(), c.rays.end())) throw std::invalid_argument("cone indices must be sorted");
      for (std::size_t k = 0; k < c.rays.size(); ++k) {
        int i = c.rays[k];
        if (i < 0 || i >= static_cast<int>(rays_.size())) throw std::invalid_argument("cone ray index out of range");
        if (k && c.rays[k - 1] == i) throw std::invalid_argument("repeated ray in cone");
        used[i] = 1;
      }
    }
    for (std::size_t i = 0; i < used.size(); ++i)
      if (!used[i]) throw std::invalid_argument("ray not contained in any maximal cone");
  }

  int rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
};

namespace detail {

inline void require_pure(const Fan& f) {
  for (const auto& c : f.max_cones()) {
    std::vector<IntVector> gens;
    for (int i : c.rays) gens.push_back(f.rays()[i]);
    if (rank_rows(gens, f.rank()) != f.rank()) throw std::invalid_argument("non-pure fan");
  }
}

}  // namespace detail

inline bool is_simplicial(const Fan& f) {
  detail::require_pure(f);
  for (const auto& c : f.max_cones())
    if (static_cast<int>(c.rays.size()) != f.rank()) return false;
  return true;
}

// Completeness test for a pure fan: every ridge (facet of a maximal cone)
// must lie in exactly two maximal cones.
inline bool is_complete(const Fan& f) {
  detail::require_pure(f);
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& c : f.max_cones())
    for (const auto& facet : f.cone_facets(c)) ++ridge_count[facet.tight];
  for (const auto& [ridge, n] : ridge_count)
    if (n != 2) return false;
  return true;
}

// Star subdivision at a primitive lattice point v of the support, following
// the standard definition: cones avoiding v survive; every maximal cone
// containing v is replaced by the cones spanned by v together with the
// facets of that cone not containing v.
inline Fan star_subdivision(const Fan& f, const IntVector& v) {
  if (static_cast<int>(v.size()) != f.rank()) throw std::invalid_argument("star subdivision: rank mismatch");
  if (is_zero(v) || primitive(v) != v) throw std::invalid_argument("star subdivision center must be primitive");
  std::vector<IntVector> rays = f.rays();
  int vi = f.ray_index(v);
  if (vi < 0) {
    vi = static_cast<int>(rays.size());
    rays.push_back(v);
  }
  bool inside = false;
  std::set<std::vector<int>> new_cones;
  for (const auto& c : f.max_cones()) {
    auto facets = f.cone_facets(c);
    bool contains = true;
    for (const auto& fct : facets)
      if (dot(fct.normal, v) < 0) {
        contains = false;
        break;
      }
    if (!contains) {
      new_cones.insert(c.rays);
      continue;
    }
    inside = true;
    for (const auto& fct : facets) {
      if (dot(fct.normal, v) == 0) continue;  // facet contains v
      std::vector<int> gen = fct.tight;
      gen.push_back(vi);
      std::sort(gen.begin(), gen.end());
      new_cones.insert(std::move(gen));
    }
  }
  if (!inside) throw std::invalid_argument("star subdivision center outside the fan support");
  std::vector<Cone> cones;
  cones.reserve(new_cones.size());
  for (auto& g : new_cones) cones.push_back({g});
  return Fan::make(f.rank(), std::move(rays), std::move(cones));
}

// Simplicial refinement with the same rays and support, by star subdividing
// at generators of non-simplicial cones.  For a non-simplicial pointed cone
// some generator misses at least two facets, so each step strictly splits a
// cone and the process terminates.
inline Fan simplicialize(const Fan& f) {
  Fan g = f;
  for (int round = 0; round < 100000; ++round) {
    std::vector<Cone> order = g.max_cones();
    std::sort(order.begin(), order.end());
    const Cone* bad = nullptr;
    for (const auto& c : order)
      if (static_cast<int>(c.rays.size()) != g.rank()) {
        bad = &c;
        break;
      }
    if (!bad) return g;
    auto facets = g.cone_facets(*bad);
    int center = -1;
    for (int i : bad->rays) {
      int missing = 0;
      for (const auto& fct : facets)
        if (dot(fct.normal, g.rays()[i]) > 0) ++missing;
      if (missing >= 2) {
        center = i;
        break;
      }
    }
    if (center < 0) throw std::logic_error("simplicialize: no splitting generator found");
    g = star_subdivision(g, g.rays()[center]);
  }
  throw std::logic_error("simplicialize did not terminate");
}

// Convex hull of the ray generators.
inline LatticePolytope nabla(const Fan& f) {
  LatticePolytope p = LatticePolytope::hull(f.rays());
  if (p.dim() != f.rank() || !p.has_interior_origin()) throw std::invalid_argument("rays do not span the ambient lattice");
  return p;
}

// Face fan of a polytope with the origin in its interior: one maximal cone
// per facet, rays the primitivized vertices.
inline Fan face_fan(const LatticePolytope& P) {
  if (P.dim() != P.ambient_dim() || !P.has_interior_origin())
    throw std::invalid_argument("face fan requires a full-dimensional polytope with interior origin");
  std::vector<IntVector> rays;
  rays.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) rays.push_back(primitive(v));
  std::vector<Cone> cones;
  for (const auto& f : P.facets()) {
    Cone c;
    for (std::size_t i = 0; i < P.vertices().size(); ++i)
      if (checked_add(dot(f.normal, P.vertices()[i]), f.offset) == 0) c.rays.push_back(static_cast<int>(i));
    cones.push_back(std::move(c));
  }
  return Fan::make(P.ambient_dim(), std::move(rays), std::move(cones));
}

// Complete fan whose ray set is exactly the given list of primitive points:
// the face fan of their hull refined by star subdivisions at the leftovers,
// in lexicographic order.
inline Fan fan_spanning(std::vector<IntVector> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points)
    if (is_zero(p) || primitive(p) != p) throw std::invalid_argument("fan_spanning: points must be nonzero and primitive");
  Fan f = face_fan(LatticePolytope::hull(points));
  for (const auto& p : points)
    if (f.ray_index(p) < 0) f = star_subdivision(f, p);
  return f;
}

// Maximal projective crepant partial resolution of the fan relative to a
// dual polytope Delta: refine until the ray set is exactly the set of
// nonzero lattice points of the polar hull of Delta.  Requires every ray of
// the fan to pair >= -1 with every vertex of Delta.
inline Fan star_resolution(const Fan& f, const LatticePolytope& Delta) {
  if (Delta.ambient_dim() != f.rank() || Delta.dim() != f.rank())
    throw std::invalid_argument("Delta not in anticanonical polar");
  for (const auto& m : Delta.vertices())
    for (const auto& u : f.rays())
      if (dot(m, u) < -1) throw std::invalid_argument("Delta not in anticanonical polar");
  LatticePolytope target = Delta.polar_lattice_hull();
  std::vector<IntVector> centers;
  for (const auto& p : target.lattice_points())
    if (!is_zero(p)) centers.push_back(p);
  std::sort(centers.begin(), centers.end(), lex_less);
  Fan g = simplicialize(f);
  for (const auto& c : centers) {
    if (g.ray_index(c) >= 0) continue;
    if (primitive(c) != c) throw std::logic_error("resolution polytope unreachable");
    g = star_subdivision(g, c);
  }
  if (!(nabla(g) == target)) throw std::logic_error("resolution polytope unreachable");
  return g;
}

// Equality of fans up to the order in which rays and cones are listed.
inline bool same_fan(const Fan& a, const Fan& b) {
  if (a.rank() != b.rank() || a.rays().size() != b.rays().size() || a.max_cones().size() != b.max_cones().size())
    return false;
  std::vector<int> remap(a.rays().size());
  for (std::size_t i = 0; i < a.rays().size(); ++i) {
    int j = b.ray_index(a.rays()[i]);
    if (j < 0) return false;
    remap[i] = j;
  }
  std::set<std::vector<int>> ca, cb;
  for (const auto& c : a.max_cones()) {
    std::vector<int> m;
    for (int i : c.rays) m.push_back(remap[i]);
    std::sort(m.begin(), m.end());
    ca.insert(m);
  }
  for (const auto& c : b.max_cones()) cb.insert(c.rays);
  return ca == cb;
}

}  // namespace polytoric
