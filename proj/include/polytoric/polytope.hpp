#pragma once

// Lattice polytopes in rank <= 4 with exact integer arithmetic.
//
// Facets are found by brute force: every (dim)-subset of the input points
// spans a candidate hyperplane, and a candidate survives when all points lie
// weakly on one side.  A magnitude guard at construction proves that every
// determinant and pairing computed afterwards fits in 64 bits, so the inner
// loops run on raw machine integers; inputs beyond the guard are rejected
// rather than risking wraparound.
//
// A polytope of dimension below the ambient rank keeps its affine hull as a
// list of integer equalities plus relative facet inequalities lifted from an
// injective coordinate projection.  Together these cut the polytope out of
// the ambient lattice exactly, which is all that lattice-point scanning and
// membership need.

#include <map>
#include <optional>
#include <set>

#include "polytoric/linalg.hpp"

namespace polytoric {

// Half-space {x : <normal, x> + offset >= 0} with primitive normal.  For a
// polytope with the origin in its interior every offset is positive.
struct FacetInequality {
  IntVector normal;
  Int offset = 0;

  friend bool operator==(const FacetInequality& a, const FacetInequality& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

// Hyperplane {x : <normal, x> == value} containing the polytope.
struct AffineEquality {
  IntVector normal;
  Int value = 0;
};

namespace detail {

// Magnitude cap per ambient rank under which all hull intermediates fit in
// 64 bits: with coordinates bounded by C, point differences are < 2C,
// cofactor normals are k-minors (< k! (2C)^k for k = d-1), Bareiss steps
// multiply two (k-1)-minors, and pairings add d products normal * C.  The
// binding constraints are the Bareiss product for d = 4 (36 (2C)^6 * 2) and
// the pairing sum for d = 3 (3 * 2 (2C)^2 * C).
inline Int hull_coordinate_cap(int d) {
  switch (d) {
    case 1: return 1'000'000'000'000LL;
    case 2: return 1'000'000'000LL;
    case 3: return 500'000;
    case 4: return 12'000;
    default: return 0;
  }
}

// Determinant of a k x k block held in row-major form, by Bareiss
// elimination on raw 64-bit integers.  Caller guarantees entries are within
// the hull magnitude guard so intermediates cannot overflow.
inline Int det_raw(std::vector<Int>& m, int k) {
  Int prev = 1;
  int sign = 1;
  for (int c = 0; c < k - 1; ++c) {
    if (m[static_cast<std::size_t>(c) * k + c] == 0) {
      int pick = -1;
      for (int i = c + 1; i < k; ++i)
        if (m[static_cast<std::size_t>(i) * k + c] != 0) {
          pick = i;
          break;
        }
      if (pick == -1) return 0;
      for (int j = 0; j < k; ++j) std::swap(m[static_cast<std::size_t>(c) * k + j], m[static_cast<std::size_t>(pick) * k + j]);
      sign = -sign;
    }
    const Int pivot = m[static_cast<std::size_t>(c) * k + c];
    for (int i = c + 1; i < k; ++i) {
      const Int mic = m[static_cast<std::size_t>(i) * k + c];
      for (int j = c + 1; j < k; ++j) {
        Int& x = m[static_cast<std::size_t>(i) * k + j];
        x = (x * pivot - mic * m[static_cast<std::size_t>(c) * k + j]) / prev;
      }
      m[static_cast<std::size_t>(i) * k + c] = 0;
    }
    prev = pivot;
  }
  Int d = m[static_cast<std::size_t>(k - 1) * k + (k - 1)];
  return sign > 0 ? d : -d;
}

// Vector orthogonal to d-1 row vectors in Z^d (generalized cross product by
// cofactor expansion).  Returns the zero vector when the rows are dependent.
inline IntVector cross_product(const std::vector<IntVector>& rows, int d) {
  IntVector n(d, 0);
  if (static_cast<int>(rows.size()) != d - 1) throw std::invalid_argument("cross_product: needs d-1 rows");
  if (d == 1) return IntVector{1};
  std::vector<Int> minor(static_cast<std::size_t>(d - 1) * (d - 1));
  int sign = 1;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d - 1; ++i) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor[static_cast<std::size_t>(i) * (d - 1) + cc] = rows[i][c];
        ++cc;
      }
    }
    n[j] = sign * det_raw(minor, d - 1);
    sign = -sign;
  }
  return n;
}

// Rank of integer row sets.  The raw path is Bareiss elimination; entries
// after k steps are (k+1)-minors of the input, so with d <= 4 (at most three
// steps) and entries bounded by 600 every intermediate product stays under
// 2 * 6 * 600^3 squared < 2^63.  Larger entries take the exact big-integer
// path.
inline int rank_rows(const std::vector<IntVector>& rows, int d) {
  if (rows.empty()) return 0;
  Int mx = 0;
  for (const auto& r : rows)
    for (Int x : r) mx = std::max(mx, x < 0 ? -x : x);
  if (mx <= 600) {
    std::vector<IntVector> m = rows;
    const int nr = static_cast<int>(m.size());
    int rank = 0;
    Int prev = 1;
    for (int c = 0; c < d && rank < nr; ++c) {
      int pick = -1;
      for (int i = rank; i < nr; ++i)
        if (m[i][c] != 0) {
          pick = i;
          break;
        }
      if (pick == -1) continue;
      std::swap(m[rank], m[pick]);
      const Int pivot = m[rank][c];
      for (int i = rank + 1; i < nr; ++i) {
        const Int mic = m[i][c];
        for (int j = c + 1; j < d; ++j) m[i][j] = (m[i][j] * pivot - m[rank][j] * mic) / prev;
        m[i][c] = 0;
      }
      prev = pivot;
      ++rank;
    }
    return rank;
  }
  return rank_of(IntMatrix::from_rows(rows));
}

}  // namespace detail

class LatticePolytope {
 public:
  // Convex hull of a nonempty list of points of common rank <= 4.
  static LatticePolytope hull(std::vector<IntVector> points) {
    return LatticePolytope(std::move(points), nullptr);
  }

  // Hull whose lattice-point set is already known to the caller.
  static LatticePolytope hull_with_points(std::vector<IntVector> points, std::vector<IntVector> known_lattice_points) {
    return LatticePolytope(std::move(points), &known_lattice_points);
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<FacetInequality>& facets() const { return facets_; }
  const std::vector<AffineEquality>& affine_hull() const { return equalities_; }

  bool contains(const IntVector& p) const {
    if (static_cast<int>(p.size()) != ambient_) throw std::invalid_argument("contains: rank mismatch");
    for (const auto& e : equalities_)
      if (dot(e.normal, p) != e.value) return false;
    for (const auto& f : facets_)
      if (checked_add(dot(f.normal, p), f.offset) < 0) return false;
    return true;
  }

  bool strictly_contains(const IntVector& p) const {
    if (dim_ != ambient_) return false;
    for (const auto& f : facets_)
      if (checked_add(dot(f.normal, p), f.offset) <= 0) return false;
    return true;
  }

  bool has_interior_origin() const {
    if (dim_ != ambient_) return false;
    for (const auto& f : facets_)
      if (f.offset <= 0) return false;
    return true;
  }

  const std::vector<IntVector>& lattice_points() const {
    if (!points_) points_ = scan_lattice_points();
    return *points_;
  }

  std::vector<IntVector> interior_lattice_points() const {
    std::vector<IntVector> out;
    if (dim_ != ambient_) return out;
    for (const auto& p : lattice_points())
      if (strictly_contains(p)) out.push_back(p);
    return out;
  }

  // A full-dimensional polytope is reflexive when every facet has lattice
  // distance one from the origin.  Undefined below full dimension.
  bool is_reflexive() const {
    if (dim_ != ambient_) throw std::invalid_argument("reflexivity undefined for non-full-dimensional polytope");
    for (const auto& f : facets_)
      if (f.offset != 1) return false;
    return true;
  }

  // Lattice points of the polar polytope {m : <m, x> >= -1 on P}.  Requires
  // the origin in the interior, otherwise the polar is unbounded.
  std::vector<IntVector> polar_lattice_points() const {
    if (!has_interior_origin()) throw std::invalid_argument("polar unbounded: origin not interior");
    const int d = ambient_;
    IntVector lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      // Bounds of the rational polar, whose vertices are normal/offset.
      BigInt num_lo = facets_[0].normal[i], den_lo = facets_[0].offset;
      BigInt num_hi = num_lo, den_hi = den_lo;
      for (const auto& f : facets_) {
        BigInt nn = f.normal[i], dd = f.offset;
        if (nn * den_lo < num_lo * dd) {
          num_lo = nn;
          den_lo = dd;
        }
        if (nn * den_hi > num_hi * dd) {
          num_hi = nn;
          den_hi = dd;
        }
      }
      lo[i] = big_to_int(detail::floor_div(num_lo + den_lo - 1, den_lo));  // ceil
      hi[i] = big_to_int(detail::floor_div(num_hi, den_hi));               // floor
    }
    BigInt cells = 1;
    for (int i = 0; i < d; ++i) cells *= BigInt(std::max<Int>(0, hi[i] - lo[i] + 1));
    if (cells > 100'000'000) throw std::overflow_error("polar lattice point scan too large");
    std::vector<IntVector> out;
    IntVector m(d);
    scan_box(lo, hi, m, 0, [&](const IntVector& cand) {
      for (const auto& v : vertices_)
        if (dot_unguarded(cand, v) < -1) return;
      out.push_back(cand);
    });
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  // Convex hull of the polar's lattice points.  The polar of a lattice
  // polytope cannot gain lattice points under hulling, so the result's
  // point set equals polar_lattice_points().
  LatticePolytope polar_lattice_hull() const {
    std::vector<IntVector> pts = polar_lattice_points();
    return hull_with_points(pts, pts);
  }

  // One child per vertex v: the hull of lattice_points() minus v.  Children
  // with empty point sets are dropped.
  std::vector<LatticePolytope> subpolytope_children() const {
    std::vector<LatticePolytope> out;
    const auto& pts = lattice_points();
    for (const auto& v : vertices_) {
      std::vector<IntVector> rest;
      rest.reserve(pts.size() - 1);
      for (const auto& p : pts)
        if (p != v) rest.push_back(p);
      if (rest.empty()) continue;
      LatticePolytope child = hull(rest);
      // The child's lattice points are among the parent's, so a membership
      // filter over `rest` is a complete scan.
      std::vector<IntVector> child_pts;
      child_pts.reserve(rest.size());
      for (const auto& p : rest)
        if (child.contains(p)) child_pts.push_back(p);
      child.points_ = std::move(child_pts);
      out.push_back(std::move(child));
    }
    return out;
  }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope(std::vector<IntVector> points, std::vector<IntVector>* known_points) {
    if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
    ambient_ = static_cast<int>(points[0].size());
    if (ambient_ < 1 || ambient_ > 4) throw std::invalid_argument("ambient rank must be between 1 and 4");
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != ambient_) throw std::invalid_argument("mixed ranks in point set");
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const Int cap = detail::hull_coordinate_cap(ambient_);
    for (const auto& p : points)
      for (Int x : p)
        if (x > cap || x < -cap) throw std::overflow_error("coordinates too large for exact hull in this rank");

    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
    dim_ = detail::rank_rows(diffs, ambient_);

    if (dim_ == 0) {
      vertices_ = {points[0]};
      for (int i = 0; i < ambient_; ++i) {
        IntVector n(ambient_, 0);
        n[i] = 1;
        equalities_.push_back({n, points[0][i]});
      }
    } else if (dim_ == ambient_) {
      build_full_dim(points);
    } else {
      build_low_dim(points, diffs);
    }
    if (known_points) points_ = std::move(*known_points);
  }

  void build_full_dim(const std::vector<IntVector>& points) {
    const int d = ambient_;
    const int n = static_cast<int>(points.size());
    std::set<std::pair<IntVector, Int>> seen;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    std::vector<IntVector> rows(d - 1, IntVector(d));
    while (true) {
      for (int i = 1; i < d; ++i)
        for (int c = 0; c < d; ++c) rows[i - 1][c] = points[idx[i]][c] - points[idx[0]][c];
      IntVector nvec = d == 1 ? IntVector{1} : detail::cross_product(rows, d);
      if (!is_zero(nvec)) {
        nvec = primitive(nvec);
        const Int c0 = dot_unguarded(nvec, points[idx[0]]);
        bool below = false, above = false;
        for (int p = 0; p < n; ++p) {
          const Int s = dot_unguarded(nvec, points[p]);
          if (s < c0) below = true;
          else if (s > c0) above = true;
          if (below && above) break;
        }
        if (!below) seen.emplace(nvec, checked_sub(0, c0));
        else if (!above) seen.emplace(vec_neg(nvec), c0);
      }
      // next d-combination of {0..n-1}
      int k = d - 1;
      while (k >= 0 && idx[k] == n - d + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    for (auto& [nvec, off] : seen) facets_.push_back({nvec, off});

    // A point is a vertex exactly when its tight facet normals span.
    for (const auto& p : points) {
      std::vector<IntVector> tight;
      for (const auto& f : facets_)
        if (dot_unguarded(f.normal, p) + f.offset == 0) tight.push_back(f.normal);
      if (static_cast<int>(tight.size()) >= d && detail::rank_rows(tight, d) == d) vertices_.push_back(p);
    }
  }

  void build_low_dim(const std::vector<IntVector>& points, const std::vector<IntVector>& diffs) {
    // Integer equalities cutting out the affine hull: a saturated kernel
    // basis of the difference matrix.
    IntMatrix D = IntMatrix::from_rows(diffs);
    for (const auto& nvec : kernel_basis(D)) equalities_.push_back({nvec, dot(nvec, points[0])});

    // Pivot columns of the Hermite form give an injective coordinate
    // projection of the affine hull.
    HermiteForm h = hnf(D);
    std::vector<int> proj;
    int r = 0;
    for (int c = 0; c < D.cols && r < h.rank; ++c)
      if (h.H.at(r, c) != 0) {
        proj.push_back(c);
        ++r;
      }
    std::vector<IntVector> shadow;
    shadow.reserve(points.size());
    for (const auto& p : points) {
      IntVector q(proj.size());
      for (std::size_t j = 0; j < proj.size(); ++j) q[j] = p[proj[j]];
      shadow.push_back(q);
    }
    LatticePolytope sp = hull(shadow);
    std::map<IntVector, IntVector> back;
    for (std::size_t i = 0; i < points.size(); ++i) back[shadow[i]] = points[i];
    for (const auto& v : sp.vertices()) vertices_.push_back(back.at(v));
    std::sort(vertices_.begin(), vertices_.end(), lex_less);
    for (const auto& f : sp.facets()) {
      IntVector lift(ambient_, 0);
      for (std::size_t j = 0; j < proj.size(); ++j) lift[proj[j]] = f.normal[j];
      facets_.push_back({lift, f.offset});
    }
  }

  std::vector<IntVector> scan_lattice_points() const {
    const int d = ambient_;
    IntVector lo = vertices_[0], hi = vertices_[0];
    for (const auto& v : vertices_)
      for (int i = 0; i < d; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    BigInt cells = 1;
    for (int i = 0; i < d; ++i) cells *= BigInt(hi[i] - lo[i] + 1);
    if (cells > 100'000'000) throw std::overflow_error("lattice point scan too large");
    std::vector<IntVector> out;
    IntVector m(d);
    scan_box(lo, hi, m, 0, [&](const IntVector& cand) {
      if (contains(cand)) out.push_back(cand);
    });
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  template <typename F>
  void scan_box(const IntVector& lo, const IntVector& hi, IntVector& m, int i, const F& fn) const {
    if (i == ambient_) {
      fn(m);
      return;
    }
    for (Int x = lo[i]; x <= hi[i]; ++x) {
      m[i] = x;
      scan_box(lo, hi, m, i + 1, fn);
    }
  }

  static Int big_to_int(const BigInt& x) {
    if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
      throw std::overflow_error("value exceeds 64 bits");
    return static_cast<Int>(x);
  }

  int ambient_ = 0;
  int dim_ = -1;
  std::vector<IntVector> vertices_;
  std::vector<FacetInequality> facets_;
  std::vector<AffineEquality> equalities_;
  mutable std::optional<std::vector<IntVector>> points_;
};

inline LatticePolytope convex_hull(const std::vector<IntVector>& points) { return LatticePolytope::hull(points); }

inline std::vector<LatticePolytope> subpolytope_children(const LatticePolytope& P) { return P.subpolytope_children(); }

}  // namespace polytoric
