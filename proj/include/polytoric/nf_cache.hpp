#pragma once

// File-backed key-value store for normal-form digests.
//
// Format: one header line "polytoric nf-cache 1", then one "key value" line
// per entry.  The file is append-only; a put never rewrites existing lines.
// Re-putting a key with the value it already has is a no-op, so concurrent
// writers that agree on values can interleave safely.  Keys and values must
// be nonempty and free of whitespace.

#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace polytoric {

class NFCache {
 public:
  static constexpr const char* header = "polytoric nf-cache 1";

  // In-memory cache, not backed by any file.
  NFCache() = default;

  // Loads every entry of an existing cache file, or creates the file with a
  // fresh header when none exists.
  explicit NFCache(const std::string& path) : path_(path) {
    std::ifstream in(path_);
    if (in) {
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) {
          if (line != header)
            throw std::runtime_error(path_ + ": unsupported cache header");
          continue;
        }
        if (line.empty()) continue;
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos || sp == 0 || sp + 1 >= line.size() ||
            line.find(' ', sp + 1) != std::string::npos)
          throw std::runtime_error(path_ + ":" + std::to_string(lineno) + ": malformed cache line");
        std::string key = line.substr(0, sp);
        std::string value = line.substr(sp + 1);
        auto it = entries_.find(key);
        if (it != entries_.end() && it->second != value)
          throw std::runtime_error(path_ + ":" + std::to_string(lineno) + ": conflicting cache entries");
        entries_.emplace(std::move(key), std::move(value));
      }
    } else {
      std::ofstream create(path_);
      if (!create) throw std::runtime_error(path_ + ": cannot create cache file");
      create << header << "\n";
    }
  }

  std::optional<std::string> get(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, const std::string& value) {
    if (key.empty() || value.empty() || key.find_first_of(" \t\n") != std::string::npos ||
        value.find_first_of(" \t\n") != std::string::npos)
      throw std::invalid_argument("cache keys and values must be nonempty and whitespace-free");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      if (it->second != value) throw std::logic_error("cache put conflicts with stored value");
      return;
    }
    entries_.emplace(key, value);
    if (!path_.empty()) {
      std::ofstream out(path_, std::ios::app);
      if (!out) throw std::runtime_error(path_ + ": cannot append to cache file");
      out << key << ' ' << value << "\n";
    }
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
  }

 private:
  std::string path_;
  std::map<std::string, std::string> entries_;
  mutable std::mutex mu_;
};

}  // namespace polytoric
