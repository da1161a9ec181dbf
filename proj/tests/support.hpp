#pragma once

// Shared test helpers: a seeded RNG and random integer/unimodular matrices.
// Every generator takes the engine by reference so a test controls its seed
// and stays reproducible.

#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polytoric/base.hpp"
#include "polytoric/linalg.hpp"
#include "polytoric/matrix.hpp"

namespace testsupport {

using polytoric::Int;
using polytoric::IntMatrix;
using polytoric::IntVector;

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline IntMatrix random_matrix(std::mt19937& g, int rows, int cols, Int lo, Int hi) {
  std::uniform_int_distribution<Int> pick(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = pick(g);
  return m;
}

// Product of random elementary matrices: shears with small coefficients,
// swaps, and sign flips.  Always unimodular by construction.
inline IntMatrix random_unimodular(std::mt19937& g, int n, int steps = 12) {
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<Int> shear(-2, 2);
  IntMatrix u = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = idx(g), j = idx(g);
    switch (op(g)) {
      case 0: {
        if (i == j) break;
        Int c = shear(g);
        for (int k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
        break;
      }
      case 1:
        if (i != j)
          for (int k = 0; k < n; ++k) std::swap(u.at(i, k), u.at(j, k));
        break;
      default:
        for (int k = 0; k < n; ++k) u.at(i, k) = -u.at(i, k);
        break;
    }
  }
  return u;
}

inline std::vector<IntVector> apply_to_points(const IntMatrix& u, const std::vector<IntVector>& pts) {
  std::vector<IntVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(polytoric::mat_vec(u, p));
  return out;
}

// gcd of all k x k minors of A, the classical invariant the Smith chain
// d1 * ... * dk must reproduce.
inline boost::multiprecision::cpp_int minor_gcd(const IntMatrix& A, int k) {
  using boost::multiprecision::cpp_int;
  cpp_int g = 0;
  // Odometer over k-subsets of rows and of columns.
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  while (true) {
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    while (true) {
      IntMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = A.at(rows[i], cols[j]);
      cpp_int d = polytoric::determinant_big(sub);
      g = boost::multiprecision::gcd(g, d < 0 ? cpp_int(-d) : d);
      int t = k - 1;
      while (t >= 0 && cols[t] == A.cols - k + t) --t;
      if (t < 0) break;
      ++cols[t];
      for (int s = t + 1; s < k; ++s) cols[s] = cols[s - 1] + 1;
    }
    int t = k - 1;
    while (t >= 0 && rows[t] == A.rows - k + t) --t;
    if (t < 0) break;
    ++rows[t];
    for (int s = t + 1; s < k; ++s) rows[s] = rows[s - 1] + 1;
  }
  return g;
}

inline bool is_hermite_shape(const IntMatrix& H) {
  int last_pivot = -1;
  bool seen_zero_row = false;
  for (int i = 0; i < H.rows; ++i) {
    int p = -1;
    for (int j = 0; j < H.cols; ++j)
      if (H.at(i, j) != 0) {
        p = j;
        break;
      }
    if (p == -1) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;          // zero rows must sit at the bottom
    if (p <= last_pivot) return false;        // pivot columns strictly increase
    if (H.at(i, p) <= 0) return false;        // pivots positive
    for (int r = 0; r < i; ++r)               // entries above a pivot lie in [0, pivot)
      if (H.at(r, p) < 0 || H.at(r, p) >= H.at(i, p)) return false;
    last_pivot = p;
  }
  return true;
}

}  // namespace testsupport
