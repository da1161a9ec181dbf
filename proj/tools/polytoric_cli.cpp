// Command-line surface over the library.  Every command writes a
// deterministic byte stream for fixed inputs and flags; exit status is 0 on
// success and nonzero on errors or failed verifications.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "polytoric/enumeration.hpp"
#include "polytoric/fan.hpp"
#include "polytoric/ksdb.hpp"
#include "polytoric/mirrors.hpp"
#include "polytoric/nf_cache.hpp"
#include "polytoric/normal_form.hpp"
#include "polytoric/palp.hpp"
#include "polytoric/polytope.hpp"
#include "polytoric/records.hpp"
#include "polytoric/reid.hpp"
#include "polytoric/toric.hpp"
#include "vendor/CLI11.hpp"

namespace {

using namespace polytoric;

std::vector<IntVector> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  try {
    return parse_palp(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

LatticePolytope read_polytope(const std::string& path) { return LatticePolytope::hull(read_points(path)); }

// Fan files hold rays as a PALP matrix; the fan is the complete fan spanned
// by exactly those rays.
Fan read_fan(const std::string& path) { return fan_spanning(read_points(path)); }

IntMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) detail::palp_error(1, "missing header");
  ++lineno;
  std::vector<Int> header = detail::palp_int_line(line, lineno);
  if (header.size() != 2 || header[0] <= 0 || header[1] <= 0)
    detail::palp_error(lineno, "header must be 'nrows ncols'");
  IntMatrix M(static_cast<int>(header[0]), static_cast<int>(header[1]));
  for (int i = 0; i < M.rows;) {
    if (!std::getline(in, line)) detail::palp_error(lineno + 1, "truncated matrix");
    ++lineno;
    std::vector<Int> row = detail::palp_int_line(line, lineno);
    if (row.empty()) continue;
    if (row.size() != static_cast<std::size_t>(M.cols))
      detail::palp_error(lineno, "expected " + std::to_string(M.cols) + " entries");
    for (int j = 0; j < M.cols; ++j) M.at(i, j) = row[j];
    ++i;
  }
  return M;
}

void print_matrix(const IntMatrix& M) {
  std::cout << M.rows << ' ' << M.cols << "\n";
  for (int i = 0; i < M.rows; ++i) {
    for (int j = 0; j < M.cols; ++j) std::cout << (j ? " " : "") << M.at(i, j);
    std::cout << "\n";
  }
}

void print_point_list(const std::vector<IntVector>& pts) {
  for (const auto& p : pts) std::cout << vec_to_string(p) << "\n";
}

void print_fan(const Fan& f) {
  std::cout << "rank " << f.rank() << "\n";
  std::cout << "rays " << f.rays().size() << "\n";
  for (const auto& r : f.rays()) std::cout << vec_to_string(r) << "\n";
  std::cout << "max-cones " << f.max_cones().size() << "\n";
  for (const auto& c : f.max_cones()) {
    for (std::size_t k = 0; k < c.rays.size(); ++k) std::cout << (k ? " " : "") << c.rays[k];
    std::cout << "\n";
  }
}

IntVector parse_weights(const std::vector<std::string>& args) {
  IntVector w;
  for (const auto& a : args) {
    std::size_t used = 0;
    w.push_back(std::stoll(a, &used));
    if (used != a.size()) throw std::runtime_error("weights must be integers, got '" + a + "'");
  }
  return w;
}

int cmd_polytope(const std::string& query, const std::string& file, const std::string& file2) {
  if (query == "iso") {
    LatticePolytope A = read_polytope(file), B = read_polytope(file2);
    bool same = normal_form(A) == normal_form(B);
    std::cout << "isomorphic: " << (same ? "true" : "false") << "\n";
    return same ? 0 : 1;
  }
  LatticePolytope P = read_polytope(file);
  if (query == "points") {
    print_point_list(P.lattice_points());
    return 0;
  }
  if (query == "polar") {
    emit_palp(std::cout, P.polar_lattice_hull());
    return 0;
  }
  if (query == "reflexive") {
    bool r = P.is_reflexive();
    std::cout << "reflexive: " << (r ? "true" : "false") << "\n";
    return r ? 0 : 1;
  }
  if (query == "nf") {
    NormalFormKey key = normal_form(P);
    print_matrix(key.canonical_matrix);
    std::cout << "digest " << key.digest << "\n";
    return 0;
  }
  throw std::runtime_error("unknown polytope query '" + query + "'");
}

int cmd_wps_delta(const IntVector& w) {
  WeightSystem ws = WeightSystem::make(w);
  LatticePolytope delta = nabla(wps_fan(ws)).polar_lattice_hull();
  emit_palp(std::cout, delta);
  std::cout << "lattice-points " << delta.lattice_points().size() << "\n";
  std::cout << "reflexive: " << (delta.is_reflexive() ? "true" : "false") << "\n";
  return 0;
}

int cmd_wps_quasismooth(const IntVector& w, const std::string& xi_file) {
  WeightSystem ws = WeightSystem::make(w);
  Fan f = wps_fan(ws);
  MonomialSet Xi = xi_file.empty() ? anticanonical_points(f) : MonomialSet::make(f, read_points(xi_file));
  QuasismoothReport rep = is_quasismooth(Xi);
  std::cout << "quasismooth: " << (rep.quasismooth ? "true" : "false") << "\n";
  if (!rep.quasismooth) {
    std::cout << "violating-subset";
    for (int i : rep.violating) std::cout << ' ' << i;
    std::cout << "\n";
  }
  return rep.quasismooth ? 0 : 1;
}

int cmd_reid_verify() {
  ReidVerification rep = verify_reid();
  for (const auto& row : rep.rows)
    std::cout << "entry " << row.number << " reflexive " << (row.reflexive ? "yes" : "no") << " quasismooth "
              << (row.quasismooth ? "yes" : "no") << " gorenstein " << (row.gorenstein ? "yes" : "no") << "\n";
  std::cout << "reflexive " << (rep.rows.size() - rep.not_reflexive.size()) << "/" << rep.rows.size() << "\n";
  std::cout << "quasismooth " << (rep.rows.size() - rep.not_quasismooth.size()) << "/" << rep.rows.size() << "\n";
  std::cout << "gorenstein";
  for (int n : rep.gorenstein) std::cout << ' ' << n;
  std::cout << "\n";
  return rep.all_ok() ? 0 : 1;
}

int cmd_reid_classify() {
  ReidClassification cls = classify_reid();
  std::cout << cls.classes.size() << " classes\n";
  for (const auto& group : cls.duplicate_groups()) {
    std::cout << "group";
    for (int n : group) std::cout << ' ' << n;
    std::cout << "\n";
  }
  return 0;
}

EnumerationResult run_enumeration(const std::string& cache_path, int jobs) {
  EnumerationOptions opt;
  std::unique_ptr<NFCache> cache;
  if (!cache_path.empty()) {
    cache = std::make_unique<NFCache>(cache_path);
    opt.cache = cache.get();
  }
  opt.jobs = jobs;
  return enumerate_reflexive_subpolytopes(quartic_polytope(), opt);
}

int cmd_quartics_enumerate(const std::string& cache_path, int jobs, bool counts_only) {
  EnumerationResult res = run_enumeration(cache_path, jobs);
  std::cout << res.embedded_systems << " hulls, " << res.distinct_classes << " classes\n";
  std::cout << "orbits " << res.records.size() << "\n";
  std::cout << "fixed-hulls " << res.lattice_hulls << "\n";
  std::cout << "root-symmetries " << res.root_symmetries << "\n";
  std::cout << "nodes " << res.nodes_explored << "\n";
  if (counts_only) return 0;
  std::cout << "\n";
  for (const auto& rec : res.records) {
    Record r;
    r.type = "subpolytope";
    r.add("nf", rec.nf.digest);
    r.add("orbit", static_cast<Int>(rec.orbit_size));
    r.add("symmetries", static_cast<Int>(rec.hull_symmetries));
    if (rec.is_reid) r.add("reid-class", static_cast<Int>(*rec.is_reid));
    for (const auto& p : rec.point_set) r.add("point", p);
    emit_record(std::cout, r);
  }
  return 0;
}

int cmd_quartics_match(const std::string& cache_path, int jobs) {
  EnumerationResult res = run_enumeration(cache_path, jobs);
  ReidClassification cls = classify_reid();
  ReidMatchReport rep = match_reid(res, cls);
  std::cout << rep.matched_systems << " matching hulls, " << rep.covered_families.size() << " families, "
            << rep.matched_classes << " Picard lattices\n";
  std::cout << "matched-orbits " << rep.matched_orbits << "\n";
  std::cout << "matched-fixed-hulls " << rep.matched_hulls << "\n";
  std::cout << "families";
  for (int n : rep.covered_families) std::cout << ' ' << n;
  std::cout << "\n";
  std::cout << "distinct-label-strings " << rep.picard_labels.size() << "\n";
  for (const auto& s : rep.picard_labels) std::cout << "label " << s << "\n";
  for (const auto& [id, count] : rep.class_counts) {
    std::cout << "class";
    for (int n : cls.classes[static_cast<std::size_t>(id)]) std::cout << ' ' << n;
    std::cout << " orbits " << count << "\n";
  }
  return 0;
}

int cmd_mirror_clarke(const std::string& fan_file, const std::string& xi_file) {
  Fan f = read_fan(fan_file);
  std::vector<IntVector> Xi = read_points(xi_file);
  MirrorDatum m = clarke_mirror(f, Xi);
  std::cout << "mirror-rays " << m.mirror_rays.size() << "\n";
  print_point_list(m.mirror_rays);
  std::cout << "mirror-monomials " << m.mirror_monomials.size() << "\n";
  print_point_list(m.mirror_monomials);
  std::cout << "primitivized: " << (m.primitivized ? "true" : "false") << "\n";
  std::cout << "dropped-origin: " << (m.dropped_origin ? "true" : "false") << "\n";
  return 0;
}

int cmd_mirror_bhk(const std::string& matrix_file) {
  BHKMatrix B = BHKMatrix::make(read_matrix(matrix_file));
  BHKWeights w = bhk_weights(B);
  BHKWeights wt = bhk_weights(B.transposed());
  std::cout << "weights " << vec_to_string(w.ws.weights) << " degree " << w.degree << "\n";
  std::cout << "calabi-yau: " << (w.calabi_yau ? "true" : "false") << "\n";
  std::cout << "transpose-weights " << vec_to_string(wt.ws.weights) << " degree " << wt.degree << "\n";
  std::cout << "transpose-calabi-yau: " << (wt.calabi_yau ? "true" : "false") << "\n";
  IntVector inv = bhk_dual_group(B);
  std::cout << "dual-group";
  if (inv.empty()) std::cout << " trivial";
  for (Int x : inv) std::cout << ' ' << x;
  std::cout << "\n";
  return 0;
}

int cmd_resolve(const std::string& fan_file, const std::string& delta_file) {
  Fan f = read_fan(fan_file);
  LatticePolytope Delta = read_polytope(delta_file);
  Fan res = star_resolution(f, Delta);
  print_fan(res);
  // star_resolution already verified nabla(res) == polar hull of Delta.
  std::cout << "nabla-equals-target: true\n";
  return 0;
}

int cmd_witness(const std::string& fan1, const std::string& fan2, const std::string& xi_file) {
  Fan f1 = read_fan(fan1);
  Fan f2 = read_fan(fan2);
  std::vector<IntVector> Xi = read_points(xi_file);
  EquivalenceWitness w = equivalence_witness(f1, f2, Xi, /*materialize=*/true);
  std::cout << "witness: ok\n";
  std::cout << "common-polytope vertices " << w.common_polytope.vertices().size() << " lattice-points "
            << w.common_polytope.lattice_points().size() << "\n";
  emit_palp(std::cout, w.common_polytope);
  std::cout << "pairings " << w.pairings.size() << "\n";
  std::cout << "contained-rays " << w.contained_rays.size() << "\n";
  return 0;
}

int cmd_ksdb_ingest(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error(file + ": cannot open");
  KSDatabase db = KSDatabase::ingest(in);
  std::cout << db.size() << " entries, dimension " << db.dimension() << "\n";
  return 0;
}

int cmd_ksdb_index(const std::string& db_file, const std::string& polytope_file) {
  std::ifstream in(db_file);
  if (!in) throw std::runtime_error(db_file + ": cannot open");
  KSDatabase db = KSDatabase::ingest(in);
  LatticePolytope P = read_polytope(polytope_file);
  auto idx = db.index_of(P);
  if (!idx) {
    std::cout << "index: not found\n";
    return 1;
  }
  std::cout << "index: " << *idx << "\n";
  // Best-effort cross-check against the bundled table when the class is one
  // of the 95; index disagreement is reported, never fatal.
  std::string digest = normal_form(P).digest;
  for (const auto& e : reid_table()) {
    if (normal_form(reid_delta(e)).digest != digest) continue;
    std::cout << "table-entry " << e.number << " table-index " << e.external_index
              << (static_cast<Int>(*idx) == e.external_index ? " (agrees)" : " (differs)") << "\n";
    break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for lattice polytopes, toric fans, and reflexive enumeration"};
  app.require_subcommand(1);

  std::string file, file2, file3, xi_file, cache_path, db_file;
  std::vector<std::string> weight_args;
  int jobs = 1;
  bool counts_only = false;

  auto* polytope = app.add_subcommand("polytope", "Polytope queries on a PALP matrix file");
  polytope->require_subcommand(1);
  for (const char* q : {"points", "polar", "reflexive", "nf"}) {
    auto* sub = polytope->add_subcommand(q);
    sub->add_option("FILE", file)->required();
  }
  auto* iso = polytope->add_subcommand("iso", "Isomorphism verdict via normal forms");
  iso->add_option("FILE1", file)->required();
  iso->add_option("FILE2", file2)->required();

  auto* wps = app.add_subcommand("wps", "Weighted projective space queries");
  wps->require_subcommand(1);
  auto* wdelta = wps->add_subcommand("delta", "Print the polytope of a weight system");
  wdelta->add_option("WEIGHTS", weight_args)->required()->expected(-1);
  auto* wqs = wps->add_subcommand("quasismooth", "Quasismoothness verdict for the anticanonical system");
  wqs->add_option("WEIGHTS", weight_args)->required()->expected(-1);
  wqs->add_option("--xi", xi_file, "Monomial set file overriding the full anticanonical system");

  auto* reid = app.add_subcommand("reid", "Weight-system table pipeline");
  reid->require_subcommand(1);
  reid->add_subcommand("verify", "Reflexivity, quasismoothness, and Gorenstein reports");
  reid->add_subcommand("classify", "Group the table by polytope normal form");

  auto* quartics = app.add_subcommand("quartics", "Reflexive subpolytopes of the quartic polytope");
  quartics->require_subcommand(1);
  auto* qenum = quartics->add_subcommand("enumerate", "Counts plus one record per subpolytope orbit");
  qenum->add_option("--cache", cache_path, "Normal-form cache file");
  qenum->add_option("--jobs", jobs, "Worker threads");
  qenum->add_flag("--counts-only", counts_only, "Suppress the record stream");
  auto* qmatch = quartics->add_subcommand("match-reid", "Match enumerated classes against the table");
  qmatch->add_option("--cache", cache_path, "Normal-form cache file");
  qmatch->add_option("--jobs", jobs, "Worker threads");

  auto* mirror = app.add_subcommand("mirror", "Mirror constructions");
  mirror->require_subcommand(1);
  auto* clarke = mirror->add_subcommand("clarke", "Mirror datum of (fan, monomial set)");
  clarke->add_option("FAN_FILE", file)->required();
  clarke->add_option("XI_FILE", xi_file)->required();
  auto* bhk = mirror->add_subcommand("bhk", "Weights, CY flag, transpose, dual group of an exponent matrix");
  bhk->add_option("MATRIX_FILE", file)->required();

  auto* resolve = app.add_subcommand("resolve", "Star resolution of a fan relative to a dual polytope");
  resolve->add_option("FAN_FILE", file)->required();
  resolve->add_option("DELTA_FILE", file2)->required();

  auto* witness = app.add_subcommand("witness", "Equivalence witness for two fans sharing a monomial set");
  witness->add_option("FAN1", file)->required();
  witness->add_option("FAN2", file2)->required();
  witness->add_option("XI_FILE", file3)->required();

  auto* ksdb = app.add_subcommand("ksdb", "External classification databases");
  ksdb->require_subcommand(1);
  auto* ingest = ksdb->add_subcommand("ingest", "Load and validate a classification file");
  ingest->add_option("FILE", file)->required();
  auto* kindex = ksdb->add_subcommand("index", "Report the classification index of a polytope's class");
  kindex->add_option("POLYTOPE", file)->required();
  kindex->add_option("--db", db_file, "Classification file to search")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (polytope->parsed()) {
      for (const auto* sub : polytope->get_subcommands())
        return cmd_polytope(sub->get_name(), file, file2);
    }
    if (wps->parsed()) {
      if (wdelta->parsed()) return cmd_wps_delta(parse_weights(weight_args));
      if (wqs->parsed()) return cmd_wps_quasismooth(parse_weights(weight_args), xi_file);
    }
    if (reid->parsed()) {
      const std::string name = reid->get_subcommands().front()->get_name();
      return name == "verify" ? cmd_reid_verify() : cmd_reid_classify();
    }
    if (quartics->parsed()) {
      if (qenum->parsed()) return cmd_quartics_enumerate(cache_path, jobs, counts_only);
      if (qmatch->parsed()) return cmd_quartics_match(cache_path, jobs);
    }
    if (mirror->parsed()) {
      if (clarke->parsed()) return cmd_mirror_clarke(file, xi_file);
      if (bhk->parsed()) return cmd_mirror_bhk(file);
    }
    if (resolve->parsed()) return cmd_resolve(file, file2);
    if (witness->parsed()) return cmd_witness(file, file2, file3);
    if (ksdb->parsed()) {
      if (ingest->parsed()) return cmd_ksdb_ingest(file);
      if (kindex->parsed()) return cmd_ksdb_index(db_file, file);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command\n";
  return 2;
}
