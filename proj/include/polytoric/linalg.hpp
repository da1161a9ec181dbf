#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, integral
// solving, kernels and cokernels.  Public types carry 64-bit entries; all
// eliminations run on arbitrary-precision integers internally, so the only
// failure mode for large inputs is an explicit overflow_error when a result
// entry does not fit back into 64 bits.

#include <limits>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "polytoric/matrix.hpp"

namespace polytoric {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

using BigMatrix = std::vector<std::vector<BigInt>>;

inline BigMatrix to_big(const IntMatrix& m) {
  BigMatrix b(m.rows, std::vector<BigInt>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) b[i][j] = m.at(i, j);
  return b;
}

inline Int big_to_int(const BigInt& x) {
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
    throw std::overflow_error("normal form entry exceeds 64 bits");
  return static_cast<Int>(x);
}

inline IntMatrix from_big(const BigMatrix& b) {
  IntMatrix m(static_cast<int>(b.size()), b.empty() ? 0 : static_cast<int>(b[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = big_to_int(b[i][j]);
  return m;
}

inline BigMatrix big_identity(int n) {
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// floor(a / b) for b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline void add_row_multiple(BigMatrix& m, int dst, int src, const BigInt& c) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += c * m[src][j];
}

inline void add_col_multiple(BigMatrix& m, int dst, int src, const BigInt& c) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] += c * m[i][src];
}

inline void negate_row(BigMatrix& m, int i) {
  for (auto& x : m[i]) x = -x;
}

inline void negate_col(BigMatrix& m, int j) {
  for (auto& row : m) row[j] = -row[j];
}

}  // namespace detail

// Row-style Hermite normal form.  H = U * A with U unimodular; pivots are
// positive, entries above each pivot are reduced into [0, pivot), pivot
// columns increase strictly and zero rows sit at the bottom.  This form is
// the unique canonical representative of A under left GL(rows, Z) action.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  int rank = 0;
};

inline HermiteForm hnf(const IntMatrix& A) {
  using namespace detail;
  const int m = A.rows, n = A.cols;
  BigMatrix H = to_big(A);
  BigMatrix U = big_identity(m);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    // Euclidean elimination below row r in column c.
    while (true) {
      int piv = -1;
      for (int i = r; i < m; ++i)
        if (H[i][c] != 0 && (piv == -1 || abs(H[i][c]) < abs(H[piv][c]))) piv = i;
      if (piv == -1) break;
      if (piv != r) {
        std::swap(H[piv], H[r]);
        std::swap(U[piv], U[r]);
      }
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (H[i][c] == 0) continue;
        BigInt q = floor_div(H[i][c], H[r][c]);
        if (q != 0) {
          add_row_multiple(H, i, r, -q);
          add_row_multiple(U, i, r, -q);
        }
        if (H[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (H[r][c] == 0) continue;
    if (H[r][c] < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (int i = 0; i < r; ++i) {
      BigInt q = floor_div(H[i][c], H[r][c]);
      if (q != 0) {
        add_row_multiple(H, i, r, -q);
        add_row_multiple(U, i, r, -q);
      }
    }
    ++r;
  }
  HermiteForm out;
  out.H = from_big(H);
  out.U = from_big(U);
  out.rank = r;
  return out;
}

// Smith normal form.  U * A * V = S with U, V unimodular and S diagonal with
// a divisibility chain d1 | d2 | ... ; invariant_factors lists the diagonal
// of S (nonnegative, zeros only at the tail).
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntVector invariant_factors;
  int rank = 0;
};

inline SmithDecomposition snf(const IntMatrix& A) {
  using namespace detail;
  const int m = A.rows, n = A.cols;
  BigMatrix S = to_big(A);
  BigMatrix U = big_identity(m);
  BigMatrix V = big_identity(n);
  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (S[i][j] != 0 && (pi == -1 || abs(S[i][j]) < abs(S[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == -1) break;  // submatrix is zero
      if (pi != t) {
        std::swap(S[pi], S[t]);
        std::swap(U[pi], U[t]);
      }
      if (pj != t) {
        for (auto& row : S) std::swap(row[pj], row[t]);
        for (auto& row : V) std::swap(row[pj], row[t]);
      }
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (S[i][t] == 0) continue;
        BigInt q = floor_div(S[i][t], S[t][t]);
        if (q != 0) {
          add_row_multiple(S, i, t, -q);
          add_row_multiple(U, i, t, -q);
        }
        if (S[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < n; ++j) {
        if (S[t][j] == 0) continue;
        BigInt q = floor_div(S[t][j], S[t][t]);
        if (q != 0) {
          add_col_multiple(S, j, t, -q);
          add_col_multiple(V, j, t, -q);
        }
        if (S[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      // Row and column are clear; enforce divisibility of the remainder.
      int vi = -1;
      for (int i = t + 1; i < m && vi == -1; ++i)
        for (int j = t + 1; j < n; ++j)
          if (S[i][j] % S[t][t] != 0) {
            vi = i;
            break;
          }
      if (vi == -1) break;
      add_row_multiple(S, t, vi, 1);
      add_row_multiple(U, t, vi, 1);
    }
    if (S[t][t] < 0) {
      negate_row(S, t);
      negate_row(U, t);
    }
  }
  SmithDecomposition out;
  out.U = from_big(U);
  out.S = from_big(S);
  out.V = from_big(V);
  out.invariant_factors.resize(steps);
  for (int t = 0; t < steps; ++t) {
    out.invariant_factors[t] = out.S.at(t, t);
    if (out.invariant_factors[t] != 0) out.rank = t + 1;
  }
  return out;
}

// Determinant by Bareiss fraction-free elimination (exact).
inline BigInt determinant_big(const IntMatrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("determinant: matrix not square");
  const int n = A.rows;
  if (n == 0) return 1;
  detail::BigMatrix m = detail::to_big(A);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

inline int rank_of(const IntMatrix& A) { return hnf(A).rank; }

inline bool is_unimodular(const IntMatrix& A) {
  if (A.rows != A.cols) return false;
  BigInt d = determinant_big(A);
  return d == 1 || d == -1;
}

// One integral solution of A x = b, if any exists.
inline std::optional<IntVector> solve_integral(const IntMatrix& A, const IntVector& b) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve_integral: size mismatch");
  SmithDecomposition d = snf(A);
  IntVector ub = mat_vec(d.U, b);
  IntVector y(A.cols, 0);
  const int steps = std::min(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i) {
    Int s = i < steps ? d.S.at(i, i) : 0;
    if (s == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % s != 0) return std::nullopt;
      y[i] = ub[i] / s;
    }
  }
  return mat_vec(d.V, y);
}

// Basis of the saturated integer kernel {x : A x = 0}.
inline std::vector<IntVector> kernel_basis(const IntMatrix& A) {
  SmithDecomposition d = snf(A);
  std::vector<IntVector> basis;
  for (int j = d.rank; j < A.cols; ++j) basis.push_back(d.V.column(j));
  return basis;
}

// Invariant factors of coker(A : Z^cols -> Z^rows) = Z^rows / colspan(A).
// torsion lists the factors greater than one; free_rank counts the zero
// factors (the free part of the cokernel).
struct CokernelInvariants {
  IntVector torsion;
  int free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
};

inline CokernelInvariants cokernel_invariants(const IntMatrix& A) {
  SmithDecomposition d = snf(A);
  CokernelInvariants out;
  out.free_rank = A.rows - d.rank;
  for (Int f : d.invariant_factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

}  // namespace polytoric
