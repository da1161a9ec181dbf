#pragma once

// Shared integer primitives.  Every coordinate in the library is a 64-bit
// signed integer; routines whose intermediates can outgrow 64 bits promote
// to arbitrary precision internally and convert back with a fit check.
// Arithmetic never wraps silently: checked helpers throw std::overflow_error.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polytoric {

using Int = long long;
using IntVector = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer addition overflows 64 bits");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer subtraction overflows 64 bits");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer multiplication overflows 64 bits");
  return r;
}

// gcd on magnitudes; gcd_int(0, 0) == 0.
inline Int gcd_int(Int a, Int b) {
  unsigned long long x = a < 0 ? 0ULL - static_cast<unsigned long long>(a) : static_cast<unsigned long long>(a);
  unsigned long long y = b < 0 ? 0ULL - static_cast<unsigned long long>(b) : static_cast<unsigned long long>(b);
  while (y != 0) {
    unsigned long long t = x % y;
    x = y;
    y = t;
  }
  return static_cast<Int>(x);
}

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: rank mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

// Unchecked variant for hot loops whose operand magnitudes were bounded by
// the caller.  See LatticePolytope::hull for the guard.
inline Int dot_unguarded(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline IntVector vec_sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: rank mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline IntVector vec_neg(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
  return r;
}

inline Int content(const IntVector& v) {
  Int g = 0;
  for (Int x : v) g = gcd_int(g, x);
  return g;
}

// Smallest positive rescaling with coprime entries.  The zero vector has no
// primitive representative.
inline IntVector primitive(const IntVector& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector has no primitive representative");
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

inline bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string vec_to_string(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string point_list_to_string(const std::vector<IntVector>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ';';
    s += vec_to_string(pts[i]);
  }
  return s;
}

}  // namespace polytoric
