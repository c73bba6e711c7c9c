#pragma once

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <vector>

#include "confalg/configspace/configuration.hpp"
#include "confalg/errors.hpp"

namespace confalg {

namespace detail {

inline Complex horner(const std::vector<Complex>& z, Complex x) {
  Complex acc = 1.0;
  for (const auto& c : z) acc = acc * x + c;
  return acc;
}

inline std::pair<Complex, Complex> horner_with_derivative(const std::vector<Complex>& z, Complex x) {
  Complex p = 1.0;
  Complex dp = 0.0;
  for (const auto& c : z) {
    dp = dp * x + p;
    p = p * x + c;
  }
  return {p, dp};
}

inline double coeff_scale(const std::vector<Complex>& z, Complex x) {
  double s = 1.0;
  double ax = std::abs(x);
  double pw = 1.0;
  for (auto it = z.rbegin(); it != z.rend(); ++it) {
    s += std::abs(*it) * pw;
    pw *= ax;
  }
  return s + pw;
}

inline std::vector<Complex> companion_roots(const std::vector<Complex>& z) {
  const int n = static_cast<int>(z.size());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -z[n - 1 - i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  if (solver.info() != Eigen::Success) throw DomainError("companion eigenvalue solver failed");
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

}  // namespace detail

/// All roots of lambda^n + z_1 lambda^{n-1} + ... + z_n by Aberth-Ehrlich
/// iteration, with a companion-matrix fallback and Newton polishing.
inline Configuration<Complex> roots_numeric(const std::vector<Complex>& z, double tol = 1e-12,
                                            int max_iter = 500) {
  const std::size_t n = z.size();
  if (n == 0) return {};
  double radius = 0.0;
  for (const auto& c : z) radius = std::max(radius, std::abs(c));
  radius = 1.0 + radius;  // Cauchy bound
  std::vector<Complex> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    r[k] = std::polar(0.5 * radius, angle);
  }
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      auto [p, dp] = detail::horner_with_derivative(z, r[k]);
      if (std::abs(p) <= tol * 1e-3 * detail::coeff_scale(z, r[k])) continue;
      Complex ratio = p / dp;
      Complex sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (r[k] - r[j]);
      Complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      r[k] -= step;
      if (std::abs(step) > tol * std::max(1.0, std::abs(r[k]))) converged = false;
    }
  }
  if (!converged) r = detail::companion_roots(z);
  for (auto& x : r) {
    for (int it = 0; it < 3; ++it) {
      auto [p, dp] = detail::horner_with_derivative(z, x);
      if (std::abs(dp) < 1e-300) break;
      Complex nx = x - p / dp;
      if (std::abs(detail::horner(z, nx)) <= std::abs(p)) x = nx;
      else break;
    }
  }
  for (const auto& x : r) {
    if (std::abs(detail::horner(z, x)) > 1e-6 * detail::coeff_scale(z, x))
      throw DomainError("root finding did not converge");
  }
  return Configuration<Complex>(std::move(r));
}

}  // namespace confalg
