#pragma once

#include <string>
#include <vector>

namespace confalg {

/// One verified identity: what was checked, where it comes from, outcome.
struct Check {
  std::string name;
  std::string anchor;
  bool passed = false;
  std::string detail;
};

using Report = std::vector<Check>;

inline bool all_passed(const Report& r) {
  for (const auto& c : r)
    if (!c.passed) return false;
  return true;
}

inline void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

}  // namespace confalg
