#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "confalg/configspace/configuration.hpp"
#include "confalg/configspace/vieta.hpp"

namespace confalg {

/// Seeded generator with portable draws (plain modular reduction of the
/// raw 64-bit stream, so sequences agree across standard libraries).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  long uniform(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  Rational rational(long num_bound = 9, long den_max = 4) {
    return Rational(uniform(-num_bound, num_bound), uniform(1, den_max));
  }
  Rational nonzero_rational(long num_bound = 9, long den_max = 4) {
    Rational r;
    do r = rational(num_bound, den_max);
    while (r.is_zero());
    return r;
  }

private:
  std::mt19937_64 eng_;
};

template <Field F>
F random_scalar(Rng& rng);

template <>
inline Rational random_scalar<Rational>(Rng& rng) { return rng.rational(); }
template <>
inline Gaussian random_scalar<Gaussian>(Rng& rng) { return Gaussian(rng.rational(), rng.rational()); }
template <>
inline Eisenstein random_scalar<Eisenstein>(Rng& rng) { return Eisenstein(rng.rational(), rng.rational()); }
template <>
inline Complex random_scalar<Complex>(Rng& rng) { return {4.0 * rng.unit() - 2.0, 4.0 * rng.unit() - 2.0}; }

template <Field F>
F random_nonzero(Rng& rng) {
  F x;
  do x = random_scalar<F>(rng);
  while (near_zero(x, 1e-3));
  return x;
}

/// Random configuration with pairwise distinct points (nonzero if requested).
template <Field F>
Configuration<F> random_distinct(Rng& rng, int n, bool ordered = false, bool nonzero = false) {
  for (;;) {
    Configuration<F> q({}, ordered);
    for (int i = 0; i < n; ++i) q.points.push_back(nonzero ? random_nonzero<F>(rng) : random_scalar<F>(rng));
    if (n < 2 || !near_zero(disc_config(q), 1e-6)) return q;
  }
}

/// Random configuration with at least one repeated point.
template <Field F>
Configuration<F> random_with_repeat(Rng& rng, int n) {
  Configuration<F> q = random_distinct<F>(rng, n - 1);
  q.points.push_back(q.points[rng.uniform(0, n - 2)]);
  return q;
}

template <Field F>
Configuration<F> random_any(Rng& rng, int n) {
  Configuration<F> q;
  for (int i = 0; i < n; ++i) q.points.push_back(random_scalar<F>(rng));
  return q;
}

/// A point of the unit circle.
inline Complex random_unit(Rng& rng) { return std::polar(1.0, 2.0 * std::numbers::pi * rng.unit()); }

}  // namespace confalg
