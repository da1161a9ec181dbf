#pragma once

// External classification databases: an ordered stream of PALP matrices, one
// reflexive polytope per block, indexed by 0-based position.
//
// Block headers may carry trailing annotations after the two counts (the
// published classification files do); annotations are ignored.  Ingestion
// validates that every entry is reflexive of the dimension declared by the
// first entry.  Lookup is by normal form, so any coordinatization of a class
// finds the class's first occurrence.

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytoric/base.hpp"
#include "polytoric/normal_form.hpp"
#include "polytoric/palp.hpp"
#include "polytoric/polytope.hpp"

namespace polytoric {

class KSDatabase {
 public:
  static KSDatabase ingest(std::istream& in) {
    KSDatabase db;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream head(line);
      Int nrows = 0, ncols = 0;
      if (!(head >> nrows >> ncols)) {
        if (line.empty() || line[0] == '#') continue;
        detail::palp_error(lineno, "expected a block header");
      }
      if (nrows <= 0 || ncols <= 0) detail::palp_error(lineno, "header counts must be positive");

      std::vector<std::vector<Int>> rows;
      while (rows.size() < static_cast<std::size_t>(nrows)) {
        if (!std::getline(in, line))
          detail::palp_error(lineno + 1, "truncated block: expected " + std::to_string(nrows) +
                                             " rows, got " + std::to_string(rows.size()));
        ++lineno;
        std::vector<Int> row = detail::palp_int_line(line, lineno);
        if (row.empty()) continue;
        if (row.size() != static_cast<std::size_t>(ncols))
          detail::palp_error(lineno, "expected " + std::to_string(ncols) + " entries, got " +
                                         std::to_string(row.size()));
        rows.push_back(std::move(row));
      }

      std::vector<IntVector> points;
      if (nrows > ncols) {
        points = std::move(rows);
      } else {
        points.assign(ncols, IntVector(nrows));
        for (std::size_t i = 0; i < static_cast<std::size_t>(nrows); ++i)
          for (std::size_t j = 0; j < static_cast<std::size_t>(ncols); ++j)
            points[j][i] = rows[i][j];
      }

      LatticePolytope P = LatticePolytope::hull(points);
      std::size_t ordinal = db.entries_.size();
      if (ordinal == 0) db.dimension_ = P.dim();
      if (P.dim() != db.dimension_)
        throw std::runtime_error("ksdb: entry " + std::to_string(ordinal) + " has dimension " +
                                 std::to_string(P.dim()) + ", expected " +
                                 std::to_string(db.dimension_));
      if (!P.is_reflexive())
        throw std::runtime_error("ksdb: entry " + std::to_string(ordinal) + " is not reflexive");
      db.by_digest_.emplace(normal_form(P).digest, ordinal);
      db.entries_.push_back(std::move(P));
    }
    return db;
  }

  static KSDatabase ingest_string(const std::string& text) {
    std::istringstream in(text);
    return ingest(in);
  }

  std::size_t size() const { return entries_.size(); }
  int dimension() const { return dimension_; }
  const LatticePolytope& entry(std::size_t i) const { return entries_.at(i); }

  // 0-based position of the first entry isomorphic to P, if any.
  std::optional<std::size_t> index_of(const LatticePolytope& P) const {
    auto it = by_digest_.find(normal_form(P).digest);
    if (it == by_digest_.end()) return std::nullopt;
    return it->second;
  }

 private:
  int dimension_ = 0;
  std::vector<LatticePolytope> entries_;
  std::map<std::string, std::size_t> by_digest_;  // digest of first occurrence
};

}  // namespace polytoric
