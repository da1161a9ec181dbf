#pragma once

// Canonical form of a full-dimensional lattice polytope with interior
// origin, under linear lattice isomorphism (GL(d, Z) fixing the origin).
//
// Contract: normal_form(P) == normal_form(Q) if and only if some unimodular
// map sends the vertex set of P onto the vertex set of Q.
//
// Construction.  The vertex-facet pairing matrix PM[i][j] = <n_i, v_j>
// (primitive facet normals against vertices) is invariant data: an
// isomorphism only permutes its rows and columns.  A branch-and-bound search
// finds the lexicographic maximum of PM over simultaneous row and column
// permutations together with every column (vertex) order realizing it.  Two
// vertices never share a PM column, because the facet normals span, so each
// realizing order is complete.  For each admissible vertex order the d x n
// vertex matrix is reduced by the row-style Hermite form, which cancels the
// GL(d, Z) freedom, and the lexicographically least result is the canonical
// matrix.

#include <cstdint>
#include <string>
#include <unordered_set>

#include "polytoric/polytope.hpp"

namespace polytoric {

struct NormalFormKey {
  IntMatrix canonical_matrix;  // dim x nvertices, vertices as columns
  std::string digest;          // exact serialization of canonical_matrix

  friend bool operator==(const NormalFormKey& a, const NormalFormKey& b) { return a.digest == b.digest; }
  friend bool operator!=(const NormalFormKey& a, const NormalFormKey& b) { return a.digest != b.digest; }
  friend bool operator<(const NormalFormKey& a, const NormalFormKey& b) { return a.digest < b.digest; }
};

namespace detail {

struct PmState {
  std::uint64_t used_rows = 0;
  std::vector<std::vector<int>> blocks;  // ordered partition of column indices

  std::string key() const {
    std::string s = std::to_string(used_rows);
    for (const auto& b : blocks) {
      s += '|';
      for (int c : b) {
        s += std::to_string(c);
        s += ',';
      }
    }
    return s;
  }
};

// All column orders realizing the lexicographic maximum of PM under row and
// column permutations.
inline std::vector<std::vector<int>> pm_maximizing_column_orders(const IntMatrix& pm) {
  const int nr = pm.rows, nc = pm.cols;
  if (nr > 63) throw std::invalid_argument("normal form: too many facets");
  std::vector<PmState> states(1);
  states[0].blocks.push_back({});
  for (int c = 0; c < nc; ++c) states[0].blocks[0].push_back(c);

  IntVector best_row;
  for (int depth = 0; depth < nr; ++depth) {
    std::vector<PmState> next;
    std::unordered_set<std::string> seen;
    best_row.assign(nc, 0);
    bool have_best = false;
    for (const auto& st : states) {
      for (int r = 0; r < nr; ++r) {
        if (st.used_rows & (1ULL << r)) continue;
        IntVector seq;
        seq.reserve(nc);
        for (const auto& b : st.blocks) {
          IntVector vals;
          vals.reserve(b.size());
          for (int c : b) vals.push_back(pm.at(r, c));
          std::sort(vals.rbegin(), vals.rend());
          seq.insert(seq.end(), vals.begin(), vals.end());
        }
        int cmp = have_best ? (seq < best_row ? -1 : (best_row < seq ? 1 : 0)) : 1;
        if (cmp < 0) continue;
        if (cmp > 0) {
          best_row = seq;
          have_best = true;
          next.clear();
          seen.clear();
        }
        PmState ns;
        ns.used_rows = st.used_rows | (1ULL << r);
        for (const auto& b : st.blocks) {
          // Split the block by descending value of row r.
          std::vector<std::pair<Int, int>> tag;
          tag.reserve(b.size());
          for (int c : b) tag.emplace_back(-pm.at(r, c), c);
          std::sort(tag.begin(), tag.end());
          std::size_t i = 0;
          while (i < tag.size()) {
            std::size_t j = i;
            std::vector<int> nb;
            while (j < tag.size() && tag[j].first == tag[i].first) nb.push_back(tag[j++].second);
            std::sort(nb.begin(), nb.end());
            ns.blocks.push_back(std::move(nb));
            i = j;
          }
        }
        if (seen.insert(ns.key()).second) next.push_back(std::move(ns));
      }
    }
    states = std::move(next);
  }

  std::set<std::vector<int>> orders;
  for (const auto& st : states) {
    std::vector<int> order;
    order.reserve(nc);
    for (const auto& b : st.blocks)
      for (int c : b) order.push_back(c);
    orders.insert(order);
  }
  return {orders.begin(), orders.end()};
}

}  // namespace detail

inline NormalFormKey normal_form(const LatticePolytope& P) {
  if (P.dim() != P.ambient_dim()) throw std::invalid_argument("normal form undefined for non-full-dimensional polytope");
  if (!P.has_interior_origin()) throw std::invalid_argument("normal form requires the origin in the interior");
  const auto& verts = P.vertices();
  const auto& facets = P.facets();
  const int nv = static_cast<int>(verts.size());
  const int nf = static_cast<int>(facets.size());
  const int d = P.ambient_dim();

  IntMatrix pm(nf, nv);
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nv; ++j) pm.at(i, j) = dot(facets[i].normal, verts[j]);

  IntMatrix best;
  bool have = false;
  for (const auto& order : detail::pm_maximizing_column_orders(pm)) {
    IntMatrix vm(d, nv);
    for (int j = 0; j < nv; ++j)
      for (int i = 0; i < d; ++i) vm.at(i, j) = verts[order[j]][i];
    IntMatrix H = hnf(vm).H;
    if (!have || H.a < best.a) {
      best = H;
      have = true;
    }
  }
  NormalFormKey key;
  key.canonical_matrix = best;
  key.digest = best.to_string();
  return key;
}

inline bool lattice_isomorphic(const LatticePolytope& P, const LatticePolytope& Q) {
  return normal_form(P) == normal_form(Q);
}

// Inverse of NormalFormKey serialization: "RxC:e,e,..." row-major.
inline NormalFormKey key_from_digest(const std::string& digest) {
  const auto fail = [] { throw std::invalid_argument("malformed normal form digest"); };
  std::size_t x = digest.find('x');
  std::size_t colon = digest.find(':');
  if (x == std::string::npos || colon == std::string::npos || x == 0 || x + 1 >= colon) fail();
  int rows = 0, cols = 0;
  try {
    std::size_t used = 0;
    rows = std::stoi(digest.substr(0, x), &used);
    if (used != x) fail();
    cols = std::stoi(digest.substr(x + 1, colon - x - 1), &used);
    if (used != colon - x - 1) fail();
  } catch (const std::invalid_argument&) {
    fail();
  } catch (const std::out_of_range&) {
    fail();
  }
  if (rows <= 0 || cols <= 0) fail();
  NormalFormKey key;
  key.canonical_matrix = IntMatrix(rows, cols);
  std::size_t pos = colon + 1;
  for (std::size_t k = 0; k < key.canonical_matrix.a.size(); ++k) {
    std::size_t next = digest.find(',', pos);
    std::string tok = digest.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) fail();
    try {
      std::size_t used = 0;
      key.canonical_matrix.a[k] = std::stoll(tok, &used);
      if (used != tok.size()) fail();
    } catch (const std::invalid_argument&) {
      fail();
    } catch (const std::out_of_range&) {
      fail();
    }
    bool last = (k + 1 == key.canonical_matrix.a.size());
    if (last != (next == std::string::npos)) fail();
    pos = next + 1;
  }
  if (key.canonical_matrix.to_string() != digest) fail();
  key.digest = digest;
  return key;
}

}  // namespace polytoric
