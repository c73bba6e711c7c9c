#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "confalg/exactalg/field.hpp"

namespace confalg {

/// A finite multiset (or ordered tuple) of points of the complex line.
template <Field F>
struct Configuration {
  std::vector<F> points;
  bool ordered = false;

  Configuration() = default;
  Configuration(std::vector<F> pts, bool is_ordered = false) : points(std::move(pts)), ordered(is_ordered) {}

  int n() const { return static_cast<int>(points.size()); }
  const F& operator[](std::size_t i) const { return points[i]; }

  /// Canonical sorted form; only meaningful for exact fields.
  Configuration canonical() const {
    Configuration c = *this;
    if (!ordered) std::sort(c.points.begin(), c.points.end(), field_traits<F>::less);
    return c;
  }
};

/// Coefficients (z_1, ..., z_n) of the monic polynomial lambda^n + z_1 lambda^{n-1} + ... + z_n.
template <Field F>
struct CoeffPoint {
  std::vector<F> z;
  int n() const { return static_cast<int>(z.size()); }
  friend bool operator==(const CoeffPoint&, const CoeffPoint&) = default;
};

/// Balanced coefficients w = (w_2, ..., w_n) plus the barycenter y.
template <Field F>
struct ChartPoint {
  std::vector<F> w;
  F y;
  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

/// Equality of configurations. Exact fields compare canonical forms;
/// floats use a greedy nearest-point matching within tol.
template <Field F>
bool same_configuration(const Configuration<F>& a, const Configuration<F>& b, double tol = 1e-9) {
  if (a.n() != b.n()) return false;
  if constexpr (is_exact_v<F>) {
    (void)tol;
    if (a.ordered && b.ordered) return a.points == b.points;
    return a.canonical().points == b.canonical().points;
  } else {
    if (a.ordered && b.ordered) {
      for (int i = 0; i < a.n(); ++i)
        if (!near(a.points[i], b.points[i], tol)) return false;
      return true;
    }
    std::vector<bool> used(b.points.size(), false);
    for (const auto& p : a.points) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t arg = 0;
      for (std::size_t j = 0; j < b.points.size(); ++j) {
        if (used[j]) continue;
        double d = std::abs(to_complex(p) - to_complex(b.points[j]));
        if (d < best) {
          best = d;
          arg = j;
        }
      }
      if (best > tol * std::max(1.0, std::abs(to_complex(p)))) return false;
      used[arg] = true;
    }
    return true;
  }
}

template <Field F>
Configuration<Complex> to_complex_config(const Configuration<F>& q) {
  Configuration<Complex> out;
  out.ordered = q.ordered;
  for (const auto& p : q.points) out.points.push_back(to_complex(p));
  return out;
}

}  // namespace confalg
