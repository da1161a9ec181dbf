#pragma once

// Self-describing text records, one block per entity.
//
// A record is a "record TYPE" line followed by "key value..." lines and a
// blank line (or end of stream).  Keys are single tokens; values run to end
// of line.  Emission is deterministic: fields appear in the order they were
// added.  This is the on-disk shape of the bundled Reid table and the stream
// format of `quartics enumerate`.

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polytoric/base.hpp"
#include "polytoric/reid.hpp"

namespace polytoric {

struct Record {
  std::string type;
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }

  void add(const std::string& key, Int value) { fields.emplace_back(key, std::to_string(value)); }

  void add(const std::string& key, const IntVector& value) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < value.size(); ++i) ss << (i ? " " : "") << value[i];
    fields.emplace_back(key, ss.str());
  }

  // First value stored under key; throws when the key is absent.
  const std::string& get(const std::string& key) const {
    for (const auto& f : fields)
      if (f.first == key) return f.second;
    throw std::runtime_error("record " + type + ": missing field '" + key + "'");
  }

  bool has(const std::string& key) const {
    for (const auto& f : fields)
      if (f.first == key) return true;
    return false;
  }

  // Every value stored under key, in field order; keys may repeat.
  std::vector<std::string> get_all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& f : fields)
      if (f.first == key) out.push_back(f.second);
    return out;
  }

  Int get_int(const std::string& key) const {
    const std::string& v = get(key);
    std::size_t used = 0;
    Int out = 0;
    try {
      out = std::stoll(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v.size())
      throw std::runtime_error("record " + type + ": field '" + key + "' is not an integer");
    return out;
  }

  IntVector get_vector(const std::string& key) const {
    std::istringstream ss(get(key));
    IntVector out;
    Int x;
    while (ss >> x) out.push_back(x);
    if (!ss.eof())
      throw std::runtime_error("record " + type + ": field '" + key + "' is not an integer vector");
    return out;
  }
};

inline void emit_record(std::ostream& out, const Record& rec) {
  out << "record " << rec.type << "\n";
  for (const auto& f : rec.fields) out << f.first << ' ' << f.second << "\n";
  out << "\n";
}

// Reads every record in the stream.  Junk outside records and unterminated
// final records are reported with 1-based line numbers.
inline std::vector<Record> parse_records(std::istream& in) {
  std::vector<Record> out;
  std::string line;
  std::size_t lineno = 0;
  Record current;
  bool open = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      if (open) {
        out.push_back(std::move(current));
        current = Record{};
        open = false;
      }
      continue;
    }
    if (line[0] == '#') continue;
    std::size_t sp = line.find(' ');
    std::string key = line.substr(0, sp == std::string::npos ? line.size() : sp);
    std::string value = sp == std::string::npos ? std::string() : line.substr(sp + 1);
    if (!open) {
      if (key != "record" || value.empty())
        throw std::runtime_error("records: line " + std::to_string(lineno) +
                                 ": expected 'record TYPE'");
      current.type = value;
      open = true;
    } else {
      current.add(key, value);
    }
  }
  if (open) out.push_back(std::move(current));
  return out;
}

inline std::vector<Record> parse_records_string(const std::string& text) {
  std::istringstream in(text);
  return parse_records(in);
}

// The bundled weight-system table travels as "reid-entry" records.

inline Record reid_entry_record(const ReidEntry& e) {
  Record rec;
  rec.type = "reid-entry";
  rec.add("number", static_cast<Int>(e.number));
  rec.add("weights", e.weights);
  rec.add("picard", e.picard_label);
  rec.add("index", e.external_index);
  return rec;
}

inline ReidEntry reid_entry_from_record(const Record& rec) {
  if (rec.type != "reid-entry")
    throw std::runtime_error("records: expected a reid-entry record, got '" + rec.type + "'");
  ReidEntry e;
  e.number = static_cast<int>(rec.get_int("number"));
  e.weights = rec.get_vector("weights");
  e.picard_label = rec.get("picard");
  e.external_index = rec.get_int("index");
  return e;
}

}  // namespace polytoric
