#pragma once

// PALP matrix files: a header line "nrows ncols", then nrows lines of ncols
// whitespace-separated integers, then optional comment lines.
//
// Orientation: vertices are rows when nrows > ncols, columns otherwise (so a
// bare "3 4" file holds 4 points in dimension 3).  A trailing comment naming
// "vertices as rows" or "vertices as columns" overrides the count inference;
// emit_palp always writes one, which makes parse(emit(P)) recover the vertex
// set of P even when the counts alone would be ambiguous.  Parse errors carry
// the 1-based line number.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytoric/base.hpp"
#include "polytoric/polytope.hpp"

namespace polytoric {

namespace detail {

[[noreturn]] inline void palp_error(std::size_t lineno, const std::string& what) {
  throw std::runtime_error("palp: line " + std::to_string(lineno) + ": " + what);
}

inline std::vector<Int> palp_int_line(const std::string& line, std::size_t lineno) {
  std::istringstream ss(line);
  std::vector<Int> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      palp_error(lineno, "non-integer token '" + tok + "'");
    }
    if (used != tok.size()) palp_error(lineno, "non-integer token '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

// Reads one PALP matrix and returns its points.  Lines after the matrix are
// comments; one may declare the orientation.  Throws std::runtime_error with
// a line number on any malformed input, including truncation.
inline std::vector<IntVector> parse_palp(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) detail::palp_error(1, "missing header");
  ++lineno;
  std::vector<Int> header = detail::palp_int_line(line, lineno);
  if (header.size() != 2) detail::palp_error(lineno, "header must be 'nrows ncols'");
  if (header[0] <= 0 || header[1] <= 0) detail::palp_error(lineno, "header counts must be positive");
  std::size_t nrows = static_cast<std::size_t>(header[0]);
  std::size_t ncols = static_cast<std::size_t>(header[1]);

  std::vector<std::vector<Int>> rows;
  while (rows.size() < nrows) {
    if (!std::getline(in, line))
      detail::palp_error(lineno + 1, "truncated matrix: expected " + std::to_string(nrows) +
                                         " rows, got " + std::to_string(rows.size()));
    ++lineno;
    std::vector<Int> row = detail::palp_int_line(line, lineno);
    if (row.empty()) continue;
    if (row.size() != ncols)
      detail::palp_error(lineno, "expected " + std::to_string(ncols) + " entries, got " +
                                     std::to_string(row.size()));
    rows.push_back(std::move(row));
  }

  bool rows_are_points = nrows > ncols;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find("vertices as rows") != std::string::npos) rows_are_points = true;
    if (line.find("vertices as columns") != std::string::npos) rows_are_points = false;
  }

  std::vector<IntVector> points;
  if (rows_are_points) {
    points = std::move(rows);
  } else {
    points.assign(ncols, IntVector(nrows));
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) points[j][i] = rows[i][j];
  }
  return points;
}

inline std::vector<IntVector> parse_palp_string(const std::string& text) {
  std::istringstream in(text);
  return parse_palp(in);
}

// Writes the vertex matrix of P with a comment declaring the orientation.
// Columns when the vertex count is at least the dimension (the count
// inference then agrees with the comment), rows otherwise.
inline void emit_palp(std::ostream& out, const LatticePolytope& P) {
  const std::vector<IntVector>& verts = P.vertices();
  if (verts.empty()) throw std::invalid_argument("emit_palp: empty polytope");
  std::size_t d = verts[0].size();
  std::size_t n = verts.size();
  if (n >= d) {
    out << d << ' ' << n << "\n";
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << verts[j][i];
      out << "\n";
    }
    out << "# vertices as columns\n";
  } else {
    out << n << ' ' << d << "\n";
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < d; ++i) out << (i ? " " : "") << verts[j][i];
      out << "\n";
    }
    out << "# vertices as rows\n";
  }
}

inline std::string emit_palp_string(const LatticePolytope& P) {
  std::ostringstream out;
  emit_palp(out, P);
  return out.str();
}

}  // namespace polytoric
