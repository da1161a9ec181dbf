#pragma once

// The 95 weight systems of Reid's list with their Picard lattice labels and
// external polytope-database indices, plus the verification pipeline: the
// reflexive Delta of each entry, the quasismoothness criterion on its full
// anticanonical system, the Gorenstein partition, and the normal-form
// classification into 81 isomorphism classes.

#include <map>

#include "polytoric/toric.hpp"

namespace polytoric {

struct ReidEntry {
  int number = 0;              // 1..95
  IntVector weights;           // table order, not sorted
  std::string picard_label;    // opaque, transliterated to ASCII
  Int external_index = 0;      // polytope-database index, informational

  WeightSystem weight_system() const { return WeightSystem::make(weights); }
};

inline const std::vector<ReidEntry>& reid_table() {
  static const std::vector<ReidEntry> table = {
      {1, {1, 1, 1, 1}, "<4>", 4311},
      {2, {2, 3, 3, 4}, "E6 + D4 + U(3)", 1945},
      {3, {1, 1, 2, 2}, "M{(1,1,1),(1,1,1),0}", 4281},
      {4, {1, 3, 4, 4}, "T{4,4,4}", 3727},
      {5, {1, 1, 1, 3}, "<2>", 4317},
      {6, {1, 2, 2, 5}, "D4 + U(2)", 4255},
      {7, {1, 1, 2, 4}, "M{(1,1),(1,1),0}", 4312},
      {8, {1, 2, 3, 6}, "M{(1,1,2,2),(1,1,1,1), -2}", 4228},
      {9, {1, 4, 5, 10}, "T{2,5,5}", 3993},
      {10, {1, 1, 4, 6}, "U", 4318},
      {11, {2, 3, 10, 15}, "E6 + D4 + U", 3038},
      {12, {1, 2, 9, 6}, "D4 + U", 4282},
      {13, {1, 3, 8, 12}, "E6 + U", 4229},
      {14, {1, 6, 14, 21}, "E8 + U", 4080},
      {15, {3, 3, 4, 5}, "E6 + (A2)^3 + U", 751},
      {16, {3, 6, 7, 8}, "E8 + (A2)^3 + U", 87},
      {17, {2, 3, 5, 5}, "T{2,5,5} + A4", 1538},
      {18, {1, 2, 3, 3}, "M{(1,2,2,2),(1,1,1,1),-2}", 4005},
      {19, {1, 2, 2, 3}, "M{(1,1,1,1,2),(1,1,1,1,1),-2}", 4091},
      {20, {1, 6, 8, 9}, "E8 + A2 + U", 3045},
      {21, {1, 1, 1, 2}, "[2,1;1,-2]", 4309},
      {22, {1, 3, 5, 6}, "E6 + A2 + U", 3733},
      {23, {2, 2, 3, 5}, "D5 + D4 + U(2)", 2705},
      {24, {1, 2, 4, 5}, "D4 + A2 + U", 4083},
      {25, {1, 1, 3, 4}, "A2 + U", 4308},
      {26, {2, 4, 5, 9}, "D8 + D4 + U", 1114},
      {27, {2, 3, 8, 11}, "E8 + D4+ U", 1949},
      {28, {1, 3, 7, 10}, "E8 + U", 4080},
      {29, {4, 5, 6, 15}, "T{2,5,5} + D6", 223},
      {30, {5, 7, 8, 20}, "E8 + T{2,5,5}", 31},
      {31, {3, 4, 5, 12}, "E6 + A7 + U", 749},
      {32, {2, 2, 3, 7}, "D4+ D4 + U(2)", 3322},
      {33, {2, 3, 4, 9}, "M{(1,1,1,1,2,2,3),(1,1,1,1,1,1,1),-4}", 2356},
      {34, {2, 6, 7, 15}, "D8 + D4 + U", 1114},
      {35, {3, 4, 7, 14}, "E8 + A6 + U", 760},
      {36, {2, 3, 5, 10}, "T{2,5,5} + A3", 2359},
      {37, {1, 3, 4, 8}, "T{3,4,4}", 4088},
      {38, {1, 3, 5, 9}, "E8 + A1 + U", 3731},
      {39, {1, 6, 8, 15}, "E6 + A1 + U", 4082},
      {40, {1, 2, 4, 7}, "D4 + A1 + U", 4233},
      {41, {2, 3, 7, 12}, "E6 + D5 + U", 2357},
      {42, {1, 1, 3, 5}, "A1 + U", 4316},
      {43, {3, 4, 11, 18}, "E8 + E6 + U", 745},
      {44, {1, 2, 5, 8}, "D5 + U", 4256},
      {45, {1, 4, 9, 14}, "E8 + U", 4080},
      {46, {5, 6, 22, 33}, "E8^2 + U", 88},
      {47, {3, 4, 14, 21}, "E7 + E6 + U", 1124},
      {48, {3, 5, 16, 24}, "E8 + E6 + U", 745},
      {49, {2, 5, 14, 21}, "E8 + D4 + U", 1949},
      {50, {1, 4, 10, 15}, "E7 + U", 4147},
      {51, {1, 5, 12, 18}, "E8 + U", 4080},
      {52, {7, 8, 9, 12}, "(E8)^2 + <-4> + U", 0},
      {53, {3, 4, 5, 6}, "M{(1,2,2,2,3,4), (1,1,1,1,1,1),-4}", 246},
      {54, {3, 5, 6, 7}, "E8 + (A2)^3 + U", 98},
      {55, {2, 5, 6, 7}, "D9 + D4 + U", 443},
      {56, {5, 6, 8, 11}, "E8^2 + A1 + U", 2},
      {57, {4, 5, 6, 9}, "E8 + D5 + A2 + U", 36},
      {58, {1, 4, 5, 6}, "T{2,5,6}", 3344},
      {59, {1, 5, 7, 8}, "E8 + A2 + U", 3045},
      {60, {1, 4, 6, 7}, "E7 + A2 + U", 3343},
      {61, {4, 6, 7, 11}, "E8 + D8 + U", 9},
      {62, {3, 4, 5, 8}, "D9 + D5 + U", 242},
      {63, {1, 2, 3, 4}, "M{(1,1,2,3),(1,1,1,1),-2}", 4029},
      {64, {3, 4, 7, 10}, "E8 + D7 + U", 230},
      {65, {3, 5, 11, 14}, "E8^2 + U", 88},
      {66, {1, 1, 2, 3}, "M{(1,2),(1,1),0}", 4302},
      {67, {2, 3, 7, 9}, "E8 + (A2)^2 + U", 1566},
      {68, {3, 4, 10, 13}, "E8 + E7 + U", 221},
      {69, {2, 3, 4, 7}, "D4 + A7 + U", 1555},
      {70, {2, 3, 5, 8}, "E8 + A2 + (A1)^2 + U", 1569},
      {71, {1, 3, 4, 7}, "T{2,5,5}", 3888},
      {72, {1, 2, 5, 7}, "E6 + U", 4198},
      {73, {7, 8, 10, 25}, "E8^2 + A1 + U", 2},
      {74, {4, 5, 7, 16}, "M{(3,3,4,6),(1,1,1,3),-4}", 93},
      {75, {2, 4, 5, 11}, "E7 + (A1)^4 + U", 1533},
      {76, {2, 5, 6, 13}, "D8 + D4 + U", 1125},
      {77, {1, 5, 7, 13}, "E8 + A1 + U", 3731},
      {78, {1, 4, 6, 11}, "E7 + A1 + U", 3889},
      {79, {2, 5, 9, 16}, "E8 + D5 + U", 1117},
      {80, {4, 5, 13, 22}, "E8 ^2 + U", 88},
      {81, {2, 3, 8, 13}, "E8 + (A1)^3 + U", 3261},
      {82, {1, 3, 7, 11}, "E7 + U", 4147},
      {83, {4, 5, 18, 27}, "E8 + E7 + U", 221},
      {84, {5, 6, 7, 9}, "E8 + A8 + U", 6},
      {85, {2, 3, 4, 5}, "D4 + A6 + A1 + U", 1206},
      {86, {4, 5, 7, 9}, "E8 + T{2,5,5}", 16},
      {87, {1, 3, 4, 5}, "T{3,4,5}", 3605},
      {88, {2, 5, 9, 11}, "E8 + E6 + U", 473},
      {89, {1, 2, 3, 5}, "M{(1,2,4),(1,1,2),-2}", 4127},
      {90, {4, 6, 7, 17}, "E8 + D6 + A1 + U", 32},
      {91, {5, 6, 8, 19}, "E8 + E7 + A1 + U", 11},
      {92, {3, 5, 11, 19}, "E8 + E7 + U", 221},
      {93, {3, 4, 10, 17}, "E8 + D6 + U", 476},
      {94, {3, 4, 5, 7}, "M{(2,3,4,6),(1,1,2,2), -4}", 158},
      {95, {2, 3, 5, 7}, "M{(1,2,4,6),(1,1,2,3),-4}", 1328},
  };
  return table;
}

// Reflexive polytope of an entry: lattice hull of the polar of nabla of the
// weighted projective fan.
inline LatticePolytope reid_delta(const ReidEntry& e) {
  return nabla(wps_fan(e.weight_system())).polar_lattice_hull();
}

struct ReidVerification {
  struct Row {
    int number = 0;
    bool reflexive = false;
    bool quasismooth = false;
    bool gorenstein = false;
  };
  std::vector<Row> rows;          // one per entry, ascending number
  std::vector<int> not_reflexive;
  std::vector<int> not_quasismooth;
  std::vector<int> gorenstein;    // entries whose weights all divide the degree

  bool all_ok() const {
    std::vector<int> first14(14);
    for (int i = 0; i < 14; ++i) first14[i] = i + 1;
    return not_reflexive.empty() && not_quasismooth.empty() && gorenstein == first14;
  }
};

inline ReidVerification verify_reid() {
  ReidVerification report;
  for (const auto& e : reid_table()) {
    WeightSystem ws = e.weight_system();
    Fan f = wps_fan(ws);
    LatticePolytope delta = nabla(f).polar_lattice_hull();
    ReidVerification::Row row;
    row.number = e.number;
    row.reflexive = delta.is_reflexive();
    row.quasismooth = is_quasismooth(anticanonical_points(f)).quasismooth;
    row.gorenstein = is_gorenstein(ws);
    if (!row.reflexive) report.not_reflexive.push_back(e.number);
    if (!row.quasismooth) report.not_quasismooth.push_back(e.number);
    if (row.gorenstein) report.gorenstein.push_back(e.number);
    report.rows.push_back(row);
  }
  return report;
}

struct ReidClassification {
  std::vector<std::vector<int>> classes;      // ascending members, ordered by first member
  std::map<std::string, int> class_of_digest; // normal-form digest -> index into classes

  int class_of(const std::string& digest) const {
    auto it = class_of_digest.find(digest);
    return it == class_of_digest.end() ? -1 : it->second;
  }

  std::vector<std::vector<int>> duplicate_groups() const {
    std::vector<std::vector<int>> out;
    for (const auto& c : classes)
      if (c.size() > 1) out.push_back(c);
    return out;
  }
};

// Groups the 95 entries by the normal form of their Delta.
inline ReidClassification classify_reid() {
  std::map<std::string, std::vector<int>> by_digest;
  for (const auto& e : reid_table()) by_digest[normal_form(reid_delta(e)).digest].push_back(e.number);
  std::vector<std::pair<std::string, std::vector<int>>> groups(by_digest.begin(), by_digest.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });
  ReidClassification out;
  for (auto& [digest, members] : groups) {
    out.class_of_digest[digest] = static_cast<int>(out.classes.size());
    out.classes.push_back(std::move(members));
  }
  return out;
}

}  // namespace polytoric
