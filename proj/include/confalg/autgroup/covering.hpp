#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "confalg/autgroup/triangular.hpp"
#include "confalg/configspace/vieta.hpp"
#include "confalg/errors.hpp"

namespace confalg {

struct CoveringResult {
  int degree = 0;                              // N = m n (n-1) + 1
  std::vector<Complex> omegas;                 // the N scalings
  std::vector<Configuration<Complex>> preimages;
  double max_residual = 0.0;                   // max over preimages of |f(P) - Q°|
};

/// f(Q°) = c D(Q°)^m Q° on the balanced slice.
inline Configuration<Complex> covering_map(const Complex& c, int m, const Configuration<Complex>& q0) {
  const Complex factor = c * std::pow(disc_config(q0), m);
  Configuration<Complex> out = q0;
  for (auto& p : out.points) p *= factor;
  return out;
}

/// Max over points of the matched distance between two unordered configurations.
inline double matching_distance(const Configuration<Complex>& a, const Configuration<Complex>& b) {
  std::vector<bool> used(b.points.size(), false);
  double worst = 0.0;
  for (const auto& p : a.points) {
    double best = INFINITY;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < b.points.size(); ++j)
      if (!used[j] && std::abs(p - b.points[j]) < best) {
        best = std::abs(p - b.points[j]);
        arg = j;
      }
    used[arg] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

/// All N preimages omega_j Q° of Q° under f, omega^N c D^m(Q°) = 1, using
/// the principal root. The preimages must be pairwise distinct; a
/// configuration fixed by a nontrivial N-th root of unity is rejected.
inline CoveringResult covering_preimages(const Complex& c, int m, const Configuration<Complex>& q0,
                                         double tol = 1e-9) {
  const int n = q0.n();
  if (n < 2) throw DomainError("covering needs n >= 2");
  if (m < 0) throw InputError("covering needs m >= 0");
  if (std::abs(barycenter(q0)) > tol) throw DomainError("covering needs a balanced configuration");
  const Complex d = disc_config(q0);
  if (std::abs(d) < tol) throw DomainError("covering needs distinct points");
  CoveringResult out;
  out.degree = m * n * (n - 1) + 1;
  const Complex base = std::pow(1.0 / (c * std::pow(d, m)), 1.0 / out.degree);
  for (int j = 0; j < out.degree; ++j) {
    Complex omega = base * std::polar(1.0, 2.0 * std::numbers::pi * j / out.degree);
    Configuration<Complex> p = q0;
    for (auto& x : p.points) x *= omega;
    out.max_residual = std::max(out.max_residual, matching_distance(covering_map(c, m, p), q0));
    out.omegas.push_back(omega);
    out.preimages.push_back(std::move(p));
  }
  double scale = 0.0;
  for (const auto& x : q0.points) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < out.preimages.size(); ++i)
    for (std::size_t j = i + 1; j < out.preimages.size(); ++j)
      if (matching_distance(out.preimages[i], out.preimages[j]) < 1e-7 * std::max(1.0, scale) * std::abs(base))
        throw DomainError("configuration has a nontrivial stabilizer among N-th roots of unity");
  return out;
}

/// F~ = (s, s, 0, 0) and F~' = (1, 1, 1, 0) with s^{n(n-1)} = t; their
/// commutator acts as Q -> Q° + t bc.
struct CommutatorWitness {
  TriangularAut<Complex> f, fp, comm;
};

inline CommutatorWitness commutator_witness(const Complex& t, int n) {
  const Complex s = std::pow(t, 1.0 / (n * (n - 1)));
  auto f = make_aut<Complex>(AutSpace::Cn, n, s, s, 0, BalancedFunction<Complex>(n));
  auto fp = make_aut<Complex>(AutSpace::Cn, n, Complex(1), Complex(1), 1, BalancedFunction<Complex>(n));
  return {f, fp, commutator(fp, f)};
}

/// A': y -> -y - b/2 and A'': y -> y + b/2; [A', A''] is the shift y -> y + b.
template <Field F>
TriangularAut<F> shift_commutator_witness(AutSpace space, const BalancedFunction<F>& b) {
  const int n = b.n();
  const F half = from_rational<F>(Rational(1, 2));
  auto a1 = make_aut(space, n, from_int<F>(1), from_int<F>(-1), 0, -(half * b));
  auto a2 = make_aut(space, n, from_int<F>(1), from_int<F>(1), 0, half * b);
  return commutator(a1, a2);
}

}  // namespace confalg
