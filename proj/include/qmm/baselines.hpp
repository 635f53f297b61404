#pragma once

#include <map>
#include <string>

#include "qmm/count_kernel.hpp"

namespace qmm {

// Frozen regression counts, one `key=<key> count=<decimal>` line each,
// keyed by the stable parameter string of a count.
class Baselines {
 public:
  static Baselines load(const std::string& path);  // missing file -> empty store
  void save(const std::string& path) const;

  enum class Status { match, mismatch, missing };
  Status compare(const std::string& key, const BigInt& value) const;
  const BigInt* find(const std::string& key) const;
  void set(const std::string& key, const BigInt& value);
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, BigInt> entries_;
};

}  // namespace qmm
