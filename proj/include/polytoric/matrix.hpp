#pragma once

#include <initializer_list>

#include "polytoric/base.hpp"

namespace polytoric {

// Dense row-major integer matrix.  Rows and columns are 0-indexed.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {
    if (r < 0 || c < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  }

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& r) {
    if (r.empty()) return IntMatrix();
    IntMatrix m(static_cast<int>(r.size()), static_cast<int>(r[0].size()));
    for (int i = 0; i < m.rows; ++i) {
      if (static_cast<int>(r[i].size()) != m.cols) throw std::invalid_argument("from_rows: ragged rows");
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = r[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& c) {
    if (c.empty()) return IntMatrix();
    IntMatrix m(static_cast<int>(c[0].size()), static_cast<int>(c.size()));
    for (int j = 0; j < m.cols; ++j) {
      if (static_cast<int>(c[j].size()) != m.rows) throw std::invalid_argument("from_columns: ragged columns");
      for (int i = 0; i < m.rows; ++i) m.at(i, j) = c[j][i];
    }
    return m;
  }

  IntVector row(int i) const {
    IntVector r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
  }

  IntVector column(int j) const {
    IntVector c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
  }

  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> r;
    r.reserve(rows);
    for (int i = 0; i < rows; ++i) r.push_back(row(i));
    return r;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

  std::string to_string() const {
    std::string s = std::to_string(rows) + "x" + std::to_string(cols) + ":";
    for (std::size_t k = 0; k < a.size(); ++k) {
      s += (k ? "," : "");
      s += std::to_string(a[k]);
    }
    return s;
  }
};

inline IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("mat_vec: size mismatch");
  IntVector r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    Int s = 0;
    for (int j = 0; j < m.cols; ++j) s = checked_add(s, checked_mul(m.at(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: size mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Int xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = checked_add(r.at(i, j), checked_mul(xik, y.at(k, j)));
    }
  return r;
}

}  // namespace polytoric
