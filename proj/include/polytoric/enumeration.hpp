#pragma once

// Exhaustive enumeration of reflexive subpolytopes and Reid-class matching.
//
// A point set is closed when it equals the lattice points of its own hull.
// For a closed set S and a vertex v of its hull, the lattice points of
// Conv(S minus v) are exactly S minus v: every other point of S generates
// the child hull, and v itself lies outside it.  So children of closed sets
// are closed sets one vertex smaller, and every closed subset of the root is
// reachable through such deletions (a proper closed subset always misses a
// vertex of its parent).  The walk therefore runs on bitmasks over the
// root's lattice points; no hulls are ever materialized during it.
//
// Geometry per node comes from a support table.  Every facet hyperplane of
// every subpolytope passes through d of the root's points, so the primitive
// normals of hyperplanes through d-subsets, in both orientations, majorize
// every facet normal that can appear.  With support values
// h_k = max over the node of <n_k, p>:
//   origin interior  <=>  h_k >= 1 for all k       (support positivity)
//   facet normals     =   those k whose argmax set affinely spans n_k-perp
//   reflexive        <=>  h_k == 1 on all facet normals
//   vertex           <=>  tight facet normals span rank d
// Nodes whose hull loses the origin are pruned; descendants only shrink.
//
// Hulls are counted up to the lattice symmetries of the root: the group of
// unimodular maps fixing the root polytope acts on closed subsets, and one
// record per orbit is kept, the representative whose sorted point list is
// lexicographically least.  The candidate normal set and the prune test are
// invariant under that group, so walking canonical masks loses nothing.
//
// Three counts coexist.  lattice_hulls sums orbit sizes: distinct hulls in
// fixed coordinates.  records.size() is the orbit count.  embedded_systems
// counts unimodular embeddings of each occurring isomorphism class into the
// root, divided by |Aut(root)|; the division is exact because Aut(root)
// acts freely on embeddings (an embedding fixed by g forces g = id on a
// full-dimensional image).  Per record the embedding mass is
// orbit_size * hull_symmetries, constant on isomorphism classes only in
// total, so the division happens after summing.

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polytoric/linalg.hpp"
#include "polytoric/matrix.hpp"
#include "polytoric/nf_cache.hpp"
#include "polytoric/normal_form.hpp"
#include "polytoric/polytope.hpp"
#include "polytoric/reid.hpp"

namespace polytoric {

// Anticanonical polytope of P^3: the 35 exponent points of the quartic
// monomials, hulled.
inline LatticePolytope quartic_polytope() {
  std::vector<IntVector> simplex = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
  return LatticePolytope::hull(std::move(simplex)).polar_lattice_hull();
}

struct SubpolytopeRecord {
  std::vector<IntVector> point_set;  // closed, sorted, least in its orbit; the identity key
  NormalFormKey nf;
  int orbit_size = 1;       // distinct coordinate images under the root's symmetries
  int hull_symmetries = 1;  // order of the hull's own automorphism group
  std::optional<int> is_reid;  // Reid class id, filled by match_reid

  friend bool operator<(const SubpolytopeRecord& a, const SubpolytopeRecord& b) {
    return a.point_set < b.point_set;
  }
};

struct EnumerationOptions {
  NFCache* cache = nullptr;
  int jobs = 1;
};

struct EnumerationResult {
  std::vector<SubpolytopeRecord> records;  // one per orbit, sorted by point_set
  std::size_t distinct_classes = 0;        // distinct normal forms among records
  std::size_t nodes_explored = 0;          // closed subpolytopes visited, pruned ones included
  std::size_t lattice_hulls = 0;           // distinct hulls in fixed coordinates (orbit sizes summed)
  std::size_t embedded_systems = 0;        // unimodular class embeddings / |Aut(root)|
  int root_symmetries = 1;                 // |Aut(root)|
};

inline std::string point_set_digest(const std::vector<IntVector>& points) {
  std::string s = "p" + std::to_string(points.empty() ? 0 : points[0].size()) + ":";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < points[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(points[i][j]);
    }
  }
  return s;
}

namespace detail {

// Laplace expansion with checked arithmetic; fine for the d <= 4 sizes here.
inline Int det_checked(const IntMatrix& m) {
  const int n = m.rows;
  if (n == 1) return m.at(0, 0);
  Int acc = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
    }
    Int term = checked_mul(m.at(0, j), det_checked(minor));
    acc = (j % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
  }
  return acc;
}

// adj(m) with m * adj(m) = det(m) * I
inline IntMatrix adjugate(const IntMatrix& m) {
  const int n = m.rows;
  IntMatrix adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c)
          if (c != j) minor.at(rr, cc++) = m.at(r, c);
        ++rr;
      }
      Int cof = det_checked(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

}  // namespace detail

// All unimodular maps carrying P onto itself.  Such a map is pinned down by
// where it sends a linearly independent set of vertices, so candidates range
// over ordered vertex tuples: U = T * adj(B) / det(B) with B the basis
// columns and T the candidate image columns.  The identity is always among
// the results.
inline std::vector<IntMatrix> root_automorphisms(const LatticePolytope& P) {
  const std::vector<IntVector>& V = P.vertices();
  const int d = P.ambient_dim();
  std::vector<IntVector> basis;
  for (const IntVector& v : V) {
    std::vector<IntVector> probe = basis;
    probe.push_back(v);
    if (detail::rank_rows(probe, d) == static_cast<int>(probe.size())) basis.push_back(v);
    if (static_cast<int>(basis.size()) == d) break;
  }
  if (static_cast<int>(basis.size()) != d)
    throw std::invalid_argument("automorphisms require a full-dimensional polytope");
  IntMatrix B = IntMatrix::from_columns(basis);
  Int D = detail::det_checked(B);
  IntMatrix adj = detail::adjugate(B);
  std::set<IntVector> vset(V.begin(), V.end());

  std::vector<IntMatrix> autos;
  const int nv = static_cast<int>(V.size());
  std::vector<int> t(d, 0);
  for (;;) {
    bool distinct = true;
    for (int i = 0; i < d && distinct; ++i)
      for (int j = i + 1; j < d; ++j)
        if (t[i] == t[j]) {
          distinct = false;
          break;
        }
    if (distinct) {
      IntMatrix T(d, d);
      for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i) T.at(i, k) = V[t[k]][i];
      IntMatrix M = mat_mul(T, adj);
      bool integral = true;
      for (Int& e : M.a)
        if (e % D != 0) {
          integral = false;
          break;
        }
      if (integral) {
        IntMatrix U = M;
        for (Int& e : U.a) e /= D;
        Int du = detail::det_checked(U);
        if (du == 1 || du == -1) {
          bool closed_on_vertices = true;
          for (const IntVector& v : V)
            if (!vset.count(mat_vec(U, v))) {
              closed_on_vertices = false;
              break;
            }
          if (closed_on_vertices) autos.push_back(U);
        }
      }
    }
    int pos = d - 1;
    while (pos >= 0 && t[pos] == nv - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return autos;
}

// Lexicographically least sorted image of the point set under the group.
inline std::vector<IntVector> canonical_point_set(const std::vector<IntMatrix>& autos,
                                                  std::vector<IntVector> points) {
  std::sort(points.begin(), points.end());
  std::vector<IntVector> best = points;
  std::vector<IntVector> img;
  for (const IntMatrix& U : autos) {
    img.clear();
    img.reserve(points.size());
    for (const IntVector& p : points) img.push_back(mat_vec(U, p));
    std::sort(img.begin(), img.end());
    if (img < best) best = img;
  }
  return best;
}

namespace detail {

struct SupportTable {
  int d = 0;
  int n = 0;
  int K = 0;
  int G = 1;  // order of the root's automorphism group
  std::vector<IntVector> pts;
  std::vector<IntVector> normals;
  std::vector<std::int32_t> col;  // col[i * K + k] = <normals[k], pts[i]>
  std::vector<int> perm;          // perm[g * n + i] = index of the g-th map's image of pts[i]
};

// Compares masks as sorted point lists: the set whose smallest uncommon
// member is present wins.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (!diff) return false;
  return a & (diff & (0 - diff));
}

inline std::uint64_t canonical_mask(std::uint64_t m, const SupportTable& t) {
  std::uint64_t best = m;
  for (int g = 1; g < t.G; ++g) {
    const int* p = &t.perm[static_cast<std::size_t>(g) * t.n];
    std::uint64_t img = 0;
    std::uint64_t rest = m;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      img |= std::uint64_t{1} << p[i];
    }
    if (mask_lex_less(img, best)) best = img;
  }
  return best;
}

inline SupportTable build_support_table(const LatticePolytope& P) {
  SupportTable t;
  t.pts = P.lattice_points();
  t.d = P.ambient_dim();
  t.n = static_cast<int>(t.pts.size());
  const int d = t.d;

  std::set<IntVector> uniq;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  if (t.n >= d) {
    for (;;) {
      std::vector<IntVector> rows;
      rows.reserve(d - 1);
      for (int i = 1; i < d; ++i) rows.push_back(vec_sub(t.pts[idx[i]], t.pts[idx[0]]));
      IntVector nrm = cross_product(rows, d);
      if (content(nrm) != 0) {
        nrm = primitive(nrm);
        uniq.insert(nrm);
        uniq.insert(vec_neg(nrm));
      }
      int pos = d - 1;
      while (pos >= 0 && idx[pos] == t.n - d + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  t.normals.assign(uniq.begin(), uniq.end());
  t.K = static_cast<int>(t.normals.size());
  if (t.K == 0) throw std::invalid_argument("enumeration requires a full-dimensional root");

  t.col.resize(static_cast<std::size_t>(t.n) * t.K);
  for (int i = 0; i < t.n; ++i)
    for (int k = 0; k < t.K; ++k) {
      Int v = dot(t.normals[k], t.pts[i]);
      if (v > INT32_MAX || v < INT32_MIN)
        throw std::overflow_error("enumeration support table entry exceeds 32 bits");
      t.col[static_cast<std::size_t>(i) * t.K + k] = static_cast<std::int32_t>(v);
    }

  std::vector<IntMatrix> autos = root_automorphisms(P);
  t.G = static_cast<int>(autos.size());
  t.perm.resize(static_cast<std::size_t>(t.G) * t.n);
  std::map<IntVector, int> index_of;
  for (int i = 0; i < t.n; ++i) index_of[t.pts[i]] = i;
  for (int g = 0; g < t.G; ++g)
    for (int i = 0; i < t.n; ++i) {
      auto it = index_of.find(mat_vec(autos[g], t.pts[i]));
      if (it == index_of.end()) throw std::logic_error("automorphism does not permute lattice points");
      t.perm[static_cast<std::size_t>(g) * t.n + i] = it->second;
    }
  return t;
}

// Open-addressing set of nonzero masks.
class MaskSet {
 public:
  MaskSet() : slots_(1u << 16, 0) {}

  bool insert(std::uint64_t v) {
    if ((size_ + 1) * 10 > slots_.size() * 7) grow();
    return insert_raw(v);
  }

  std::size_t size() const { return size_; }

 private:
  bool insert_raw(std::uint64_t v) {
    std::size_t i = mix(v) & (slots_.size() - 1);
    while (slots_[i] != 0) {
      if (slots_[i] == v) return false;
      i = (i + 1) & (slots_.size() - 1);
    }
    slots_[i] = v;
    ++size_;
    return true;
  }

  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    size_ = 0;
    for (std::uint64_t v : old)
      if (v) insert_raw(v);
  }

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

struct EnumShared {
  const SupportTable* table = nullptr;
  std::mutex mu;
  std::condition_variable cv;
  std::vector<std::uint64_t> stack;
  MaskSet seen;
  std::vector<std::uint64_t> reflexive;
  std::size_t explored = 0;
  int idle = 0;
  int workers = 0;
  bool stop = false;
};

struct EnumScratch {
  std::vector<std::int32_t> h;
  std::vector<std::int32_t> tight;
  std::vector<int> members;
  std::vector<int> facet_ids;
  std::vector<IntVector> rows;
  std::vector<std::uint64_t> children;
  bool reflexive = false;
};

inline void enum_node(const SupportTable& t, std::uint64_t mask, EnumScratch& s) {
  const int K = t.K, d = t.d;
  s.children.clear();
  s.reflexive = false;

  s.members.clear();
  for (int i = 0; i < t.n; ++i)
    if (mask >> i & 1) s.members.push_back(i);

  s.h.assign(t.col.begin() + static_cast<std::size_t>(s.members[0]) * K,
             t.col.begin() + static_cast<std::size_t>(s.members[0] + 1) * K);
  for (std::size_t m = 1; m < s.members.size(); ++m) {
    const std::int32_t* ci = &t.col[static_cast<std::size_t>(s.members[m]) * K];
    for (int k = 0; k < K; ++k) s.h[k] = std::max(s.h[k], ci[k]);
  }
  std::int32_t hmin = s.h[0];
  for (int k = 1; k < K; ++k) hmin = std::min(hmin, s.h[k]);
  if (hmin <= 0) return;  // origin not interior; descendants only shrink

  s.tight.assign(K, 0);
  for (std::size_t m = 0; m < s.members.size(); ++m) {
    const std::int32_t* ci = &t.col[static_cast<std::size_t>(s.members[m]) * K];
    for (int k = 0; k < K; ++k) s.tight[k] += (ci[k] == s.h[k]);
  }

  s.facet_ids.clear();
  bool all_one = true;
  for (int k = 0; k < K; ++k) {
    if (s.tight[k] < d) continue;
    s.rows.clear();
    int first = -1;
    for (int i : s.members) {
      if (t.col[static_cast<std::size_t>(i) * K + k] != s.h[k]) continue;
      if (first < 0)
        first = i;
      else
        s.rows.push_back(vec_sub(t.pts[i], t.pts[first]));
    }
    if (rank_rows(s.rows, d) != d - 1) continue;  // tight set degenerate, not a facet
    s.facet_ids.push_back(k);
    if (s.h[k] != 1) all_one = false;
  }
  s.reflexive = all_one;

  for (int i : s.members) {
    s.rows.clear();
    for (int k : s.facet_ids)
      if (t.col[static_cast<std::size_t>(i) * K + k] == s.h[k]) s.rows.push_back(t.normals[k]);
    if (rank_rows(s.rows, d) != d) continue;  // not a vertex; deletion would not shrink the hull
    std::uint64_t child = mask & ~(std::uint64_t{1} << i);
    if (child) s.children.push_back(child);
  }
}

inline void enum_worker(EnumShared& sh) {
  EnumScratch scratch;
  std::vector<std::uint64_t> batch;
  std::vector<std::uint64_t> found;
  std::vector<std::uint64_t> fresh;

  std::unique_lock<std::mutex> lock(sh.mu);
  for (;;) {
    while (sh.stack.empty() && !sh.stop) {
      ++sh.idle;
      if (sh.idle == sh.workers) {
        sh.stop = true;
        sh.cv.notify_all();
        --sh.idle;
        break;
      }
      sh.cv.wait(lock);
      --sh.idle;
    }
    if (sh.stack.empty() && sh.stop) return;

    batch.clear();
    for (int b = 0; b < 32 && !sh.stack.empty(); ++b) {
      batch.push_back(sh.stack.back());
      sh.stack.pop_back();
    }
    sh.explored += batch.size();
    lock.unlock();

    found.clear();
    fresh.clear();
    for (std::uint64_t mask : batch) {
      enum_node(*sh.table, mask, scratch);
      if (scratch.reflexive) found.push_back(mask);
      for (std::uint64_t c : scratch.children) fresh.push_back(canonical_mask(c, *sh.table));
    }

    lock.lock();
    sh.reflexive.insert(sh.reflexive.end(), found.begin(), found.end());
    bool pushed = false;
    for (std::uint64_t c : fresh)
      if (sh.seen.insert(c)) {
        sh.stack.push_back(c);
        pushed = true;
      }
    if (pushed && sh.workers > 1) sh.cv.notify_all();
  }
}

}  // namespace detail

inline EnumerationResult enumerate_reflexive_subpolytopes(const LatticePolytope& P,
                                                          const EnumerationOptions& opt = {}) {
  if (!P.is_reflexive()) throw std::invalid_argument("enumeration requires a reflexive polytope");
  if (P.lattice_points().size() > 64)
    throw std::invalid_argument("enumeration supports at most 64 lattice points");

  detail::SupportTable table = detail::build_support_table(P);
  detail::EnumShared sh;
  sh.table = &table;
  sh.workers = std::max(1, std::min(opt.jobs, 64));
  std::uint64_t root = table.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << table.n) - 1;
  sh.stack.push_back(root);
  sh.seen.insert(root);

  if (sh.workers == 1) {
    detail::enum_worker(sh);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < sh.workers; ++i) pool.emplace_back(detail::enum_worker, std::ref(sh));
    for (auto& t : pool) t.join();
  }

  // Normal forms only for the reflexive hits, cached across runs.
  std::vector<std::string> digests(sh.reflexive.size());
  {
    std::atomic<std::size_t> next{0};
    auto nf_worker = [&] {
      for (;;) {
        std::size_t j = next.fetch_add(1);
        if (j >= sh.reflexive.size()) return;
        std::vector<IntVector> pts;
        for (int i = 0; i < table.n; ++i)
          if (sh.reflexive[j] >> i & 1) pts.push_back(table.pts[i]);
        std::string key = point_set_digest(pts);
        std::optional<std::string> cached = opt.cache ? opt.cache->get(key) : std::nullopt;
        if (cached) {
          digests[j] = *cached;
        } else {
          digests[j] = normal_form(LatticePolytope::hull_with_points(pts, pts)).digest;
          if (opt.cache) opt.cache->put(key, digests[j]);
        }
      }
    };
    if (sh.workers == 1) {
      nf_worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < sh.workers; ++i) pool.emplace_back(nf_worker);
      for (auto& t : pool) t.join();
    }
  }

  EnumerationResult result;
  result.nodes_explored = sh.explored;
  result.root_symmetries = table.G;
  result.records.reserve(sh.reflexive.size());
  std::set<std::string> classes;
  for (std::size_t j = 0; j < sh.reflexive.size(); ++j) {
    SubpolytopeRecord rec;
    for (int i = 0; i < table.n; ++i)
      if (sh.reflexive[j] >> i & 1) rec.point_set.push_back(table.pts[i]);
    classes.insert(digests[j]);
    rec.nf = key_from_digest(digests[j]);
    std::set<std::uint64_t> images;
    for (int g = 0; g < table.G; ++g) {
      const int* p = &table.perm[static_cast<std::size_t>(g) * table.n];
      std::uint64_t img = 0;
      std::uint64_t rest = sh.reflexive[j];
      while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        img |= std::uint64_t{1} << p[i];
      }
      images.insert(img);
    }
    rec.orbit_size = static_cast<int>(images.size());
    result.records.push_back(std::move(rec));
  }
  std::sort(result.records.begin(), result.records.end());
  result.distinct_classes = classes.size();

  // Hull symmetry orders, once per isomorphism class.
  {
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t j = 0; j < result.records.size(); ++j)
      by_class[result.records[j].nf.digest].push_back(j);
    std::vector<const std::vector<std::size_t>*> groups;
    groups.reserve(by_class.size());
    for (const auto& [dig, idxs] : by_class) groups.push_back(&idxs);
    std::atomic<std::size_t> next{0};
    auto aut_worker = [&] {
      for (;;) {
        std::size_t g = next.fetch_add(1);
        if (g >= groups.size()) return;
        const auto& idxs = *groups[g];
        const auto& pts = result.records[idxs[0]].point_set;
        LatticePolytope H = LatticePolytope::hull_with_points(pts, pts);
        int aut = static_cast<int>(root_automorphisms(H).size());
        for (std::size_t j : idxs) result.records[j].hull_symmetries = aut;
      }
    };
    if (sh.workers == 1) {
      aut_worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < sh.workers; ++i) pool.emplace_back(aut_worker);
      for (auto& t : pool) t.join();
    }
  }

  std::size_t mass = 0;
  for (const auto& rec : result.records) {
    result.lattice_hulls += static_cast<std::size_t>(rec.orbit_size);
    mass += static_cast<std::size_t>(rec.orbit_size) * rec.hull_symmetries;
  }
  if (mass % table.G != 0) throw std::logic_error("embedding mass not divisible by symmetry order");
  result.embedded_systems = mass / table.G;
  return result;
}

// Reid matching over an enumeration result.  matched_systems counts one
// linear system per (embedding orbit, covered family) pair: a system whose
// class holds three table entries contributes three times, which is how the
// per-family tally in the source data is built.
struct ReidMatchReport {
  int matched_orbits = 0;         // records matching some Reid class
  std::size_t matched_hulls = 0;  // fixed-coordinate hulls matching (orbit sizes summed)
  std::size_t matched_systems = 0;  // per-family embedding count
  int matched_classes = 0;          // distinct Reid classes hit
  std::vector<int> covered_families;       // ascending Reid entry numbers
  std::vector<std::string> picard_labels;  // sorted distinct label strings of covered families
  std::map<int, int> class_counts;         // Reid class id -> matching orbit count
  std::map<int, std::vector<IntVector>> class_examples;  // Reid class id -> least matching point set
};

inline ReidMatchReport match_reid(EnumerationResult& result, const ReidClassification& cls) {
  ReidMatchReport report;
  std::set<int> families;
  std::size_t mass = 0;
  for (auto& rec : result.records) {
    int id = cls.class_of(rec.nf.digest);
    if (id < 0) continue;
    rec.is_reid = id;
    ++report.matched_orbits;
    report.matched_hulls += static_cast<std::size_t>(rec.orbit_size);
    mass += static_cast<std::size_t>(rec.orbit_size) * rec.hull_symmetries * cls.classes[id].size();
    ++report.class_counts[id];
    if (!report.class_examples.count(id)) report.class_examples[id] = rec.point_set;
    for (int member : cls.classes[id]) families.insert(member);
  }
  if (mass % result.root_symmetries != 0)
    throw std::logic_error("embedding mass not divisible by symmetry order");
  report.matched_systems = mass / result.root_symmetries;
  report.matched_classes = static_cast<int>(report.class_counts.size());
  report.covered_families.assign(families.begin(), families.end());
  std::set<std::string> labels;
  const auto& table = reid_table();
  for (int f : report.covered_families) labels.insert(table[f - 1].picard_label);
  report.picard_labels.assign(labels.begin(), labels.end());
  return report;
}

inline ReidMatchReport match_reid(EnumerationResult& result) {
  return match_reid(result, classify_reid());
}

}  // namespace polytoric
