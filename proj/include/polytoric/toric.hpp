#pragma once

// Weighted projective spaces and the anticanonical dictionary: the fan of
// P(a_0 : ... : a_n), lattice points of the polar of nabla, the monomial
// correspondence e_rho = <m, u_rho> + 1, and the root/pointer quasismoothness
// criterion.  The criterion is sufficient for quasismoothness; callers should
// treat a negative verdict as "criterion fails", not as a proof of
// non-quasismoothness.

#include <bit>
#include <optional>

#include "polytoric/fan.hpp"

namespace polytoric {

struct WeightSystem {
  IntVector weights;
  Int degree = 0;  // sum of the weights

  static WeightSystem make(IntVector w) {
    if (w.empty()) throw std::invalid_argument("weight system needs at least one weight");
    Int g = 0, d = 0;
    for (Int a : w) {
      if (a <= 0) throw std::invalid_argument("weights must be positive");
      g = gcd_int(g, a);
      d = checked_add(d, a);
    }
    if (g != 1) throw std::invalid_argument("weights must have gcd 1");
    WeightSystem out;
    out.weights = std::move(w);
    out.degree = d;
    return out;
  }

  int count() const { return static_cast<int>(weights.size()); }
};

// Fan of a weighted projective space together with the rescaling data: the
// image of the i-th basis vector in N = Z^{n+1} / Z*(a_0..a_n) equals
// multiplicities[i] * ray_i with ray_i primitive.
struct WpsData {
  WeightSystem ws;
  Fan fan;                   // rays in weight order: ray i belongs to x_i
  IntVector multiplicities;  // all 1 exactly when the weight system is well-formed
};

inline WpsData wps_fan_data(const WeightSystem& ws) {
  const int n1 = ws.count();  // n + 1 homogeneous coordinates
  if (n1 < 2 || n1 > 5) throw std::invalid_argument("weighted projective fan supported for 2..5 weights");
  const int rank = n1 - 1;
  // Hermite form of the weight column is its Smith form: U * a = (1,0,..,0)^T,
  // so the last n rows of U present the quotient lattice N on a basis.
  IntMatrix col(n1, 1);
  for (int i = 0; i < n1; ++i) col.at(i, 0) = ws.weights[i];
  auto h = hnf(col);
  if (h.H.at(0, 0) != 1) throw std::invalid_argument("weights must have gcd 1");
  std::vector<IntVector> rays(n1);
  IntVector mult(n1);
  for (int i = 0; i < n1; ++i) {
    IntVector image(rank);
    for (int r = 0; r < rank; ++r) image[r] = h.U.at(r + 1, i);
    if (is_zero(image)) throw std::invalid_argument("degenerate weight system");
    mult[i] = content(image);
    rays[i] = primitive(image);
  }
  std::vector<Cone> cones;
  for (int skip = 0; skip < n1; ++skip) {
    Cone c;
    for (int i = 0; i < n1; ++i)
      if (i != skip) c.rays.push_back(i);
    cones.push_back(std::move(c));
  }
  WpsData out{ws, Fan::make(rank, std::move(rays), std::move(cones)), std::move(mult)};
  return out;
}

inline Fan wps_fan(const WeightSystem& ws) { return wps_fan_data(ws).fan; }

// Exponent vector of a lattice point relative to a fan, one entry per ray.
inline IntVector exponents(const IntVector& m, const Fan& f) {
  IntVector e(f.rays().size());
  for (std::size_t i = 0; i < f.rays().size(); ++i) {
    e[i] = checked_add(dot(m, f.rays()[i]), 1);
    if (e[i] < 0) throw std::invalid_argument("not an anticanonical monomial");
  }
  return e;
}

// Inverse of the correspondence: the unique m with <m, u_rho> = e_rho - 1.
inline IntVector point_of_exponents(const IntVector& e, const Fan& f) {
  if (e.size() != f.rays().size()) throw std::invalid_argument("exponent vector length mismatch");
  IntMatrix R(static_cast<int>(f.rays().size()), f.rank());
  IntVector rhs(e.size());
  for (std::size_t i = 0; i < f.rays().size(); ++i) {
    if (e[i] < 0) throw std::invalid_argument("not an anticanonical monomial");
    for (int j = 0; j < f.rank(); ++j) R.at(static_cast<int>(i), j) = f.rays()[i][j];
    rhs[i] = checked_sub(e[i], 1);
  }
  auto m = solve_integral(R, rhs);
  if (!m) throw std::invalid_argument("not an anticanonical monomial");
  if (exponents(*m, f) != e) throw std::invalid_argument("not an anticanonical monomial");
  return *m;
}

// A set of lattice points in M viewed as anticanonical monomials of a fan.
class MonomialSet {
 public:
  static MonomialSet make(const Fan& f, std::vector<IntVector> points) {
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    MonomialSet out;
    out.fan_ = f;
    out.points_ = std::move(points);
    out.exponents_.reserve(out.points_.size());
    for (const auto& m : out.points_) out.exponents_.push_back(exponents(m, f));
    return out;
  }

  const Fan& fan() const { return fan_; }
  const std::vector<IntVector>& points() const { return points_; }
  const std::vector<IntVector>& exponent_vectors() const { return exponents_; }
  std::size_t size() const { return points_.size(); }

 private:
  Fan fan_;  // only ever observed after make() installs a validated fan
  std::vector<IntVector> points_;
  std::vector<IntVector> exponents_;
};

// Full anticanonical linear system of a complete fan: every lattice point
// pairing >= -1 with all rays.
inline MonomialSet anticanonical_points(const Fan& f) {
  return MonomialSet::make(f, nabla(f).polar_lattice_points());
}

struct QuasismoothReport {
  bool quasismooth = false;
  std::vector<int> violating;  // a subset I with neither root nor pointer, when not quasismooth

  explicit operator bool() const { return quasismooth; }
};

// Root/pointer criterion over all nonempty subsets I of the ray indices:
// an I-root is an exponent vector supported inside I, an I-pointer is
// supported inside I plus one outside index j with exponent exactly 1.
inline QuasismoothReport is_quasismooth(const MonomialSet& Xi) {
  const Fan& f = Xi.fan();
  const int n1 = static_cast<int>(f.rays().size());
  if (n1 != f.rank() + 1) throw std::invalid_argument("quasismoothness criterion requires a fan with rank+1 rays");
  std::vector<unsigned> support;
  support.reserve(Xi.size());
  for (const auto& e : Xi.exponent_vectors()) {
    unsigned mask = 0;
    for (int i = 0; i < n1; ++i)
      if (e[i] > 0) mask |= 1u << i;
    support.push_back(mask);
  }
  QuasismoothReport report;
  for (unsigned I = 1; I < (1u << n1); ++I) {
    bool ok = false;
    for (std::size_t k = 0; k < support.size() && !ok; ++k) {
      unsigned outside = support[k] & ~I;
      if (outside == 0) {
        ok = true;  // I-root
      } else if ((outside & (outside - 1)) == 0) {
        int j = std::countr_zero(outside);
        if (Xi.exponent_vectors()[k][j] == 1) ok = true;  // I-pointer via j
      }
    }
    if (!ok) {
      for (int i = 0; i < n1; ++i)
        if (I & (1u << i)) report.violating.push_back(i);
      return report;
    }
  }
  report.quasismooth = true;
  return report;
}

inline bool is_gorenstein(const WeightSystem& ws) {
  for (Int a : ws.weights)
    if (ws.degree % a != 0) return false;
  return true;
}

// First ray index dividing every monomial of Xi, if any: the generic member
// of the linear system would be divisible by that coordinate.
inline std::optional<int> common_variable(const MonomialSet& Xi) {
  if (Xi.size() == 0) throw std::invalid_argument("common_variable needs a nonempty monomial set");
  const int n1 = static_cast<int>(Xi.fan().rays().size());
  for (int i = 0; i < n1; ++i) {
    bool all = true;
    for (const auto& e : Xi.exponent_vectors())
      if (e[i] == 0) {
        all = false;
        break;
      }
    if (all) return i;
  }
  return std::nullopt;
}

}  // namespace polytoric
