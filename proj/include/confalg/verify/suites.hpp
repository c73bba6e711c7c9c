#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "confalg/verify/algebra.hpp"
#include "confalg/verify/autgroup.hpp"
#include "confalg/verify/geometry.hpp"

namespace confalg::verify {

using SuiteFn = std::function<Report(const Options&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"discr-chain", discr_chain},     {"lie-relations", lie_relations},   {"flows", flows},
      {"aut-group-laws", aut_group_laws}, {"torsion", torsion},             {"zinde", zinde},
      {"covering", covering},           {"sigma-charts", sigma_charts},     {"elliptic", elliptic},
      {"counterexample", counterexample}, {"coxeter", coxeter},
  };
  return suites;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.push_back("all");
  return out;
}

struct SuiteResult {
  std::string suite;
  Report checks;
};

/// Runs one suite, or every suite for "all" (in registry order). With
/// "all", a suite that does not support opts.n is skipped.
inline std::vector<SuiteResult> run_suite(const std::string& name, const Options& opts) {
  std::vector<SuiteResult> out;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    try {
      out.push_back({suite, fn(opts)});
    } catch (const InputError&) {
      if (name != "all") throw;
    }
  }
  if (out.empty() && name != "all") throw InputError("unknown suite: " + name);
  return out;
}

}  // namespace confalg::verify
