#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/report.hpp"

namespace confalg::verify {

struct Options {
  std::uint64_t seed = 7;
  double tol = 1e-9;
  int n = 0;  // 0: the suite's full range
};

/// The n values a suite runs: the full range, or just opts.n.
inline std::vector<int> n_range(const Options& o, int lo, int hi, const char* suite) {
  if (o.n == 0) {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  if (o.n < lo || o.n > hi)
    throw InputError(std::string("suite ") + suite + " supports n in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  return {o.n};
}

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string ns(int n) { return "n=" + std::to_string(n); }

/// Separate deterministic streams per suite.
inline std::uint64_t stream(const Options& o, std::uint64_t salt) { return o.seed * 0x9E3779B97F4A7C15ULL + salt; }

}  // namespace confalg::verify
