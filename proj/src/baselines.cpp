#include "qmm/baselines.hpp"

#include <fstream>
#include <stdexcept>

namespace qmm {

Baselines Baselines::load(const std::string& path) {
  Baselines b;
  std::ifstream f(path);
  if (!f) return b;
  std::string line;
  size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const std::string where = path + ":" + std::to_string(lineno);
    if (line.rfind("key=", 0) != 0)
      throw std::runtime_error("bad baseline line at " + where);
    const size_t sp = line.find(" count=");
    if (sp == std::string::npos)
      throw std::runtime_error("bad baseline line at " + where);
    const std::string key = line.substr(4, sp - 4);
    const std::string value = line.substr(sp + 7);
    if (key.empty() || value.empty())
      throw std::runtime_error("bad baseline line at " + where);
    b.entries_[key] = BigInt(value);
  }
  return b;
}

void Baselines::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& [key, value] : entries_)
    f << "key=" << key << " count=" << value.str() << '\n';
  if (!f) throw std::runtime_error("write failed: " + path);
}

Baselines::Status Baselines::compare(const std::string& key, const BigInt& value) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return Status::missing;
  return it->second == value ? Status::match : Status::mismatch;
}

const BigInt* Baselines::find(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void Baselines::set(const std::string& key, const BigInt& value) { entries_[key] = value; }

}  // namespace qmm
