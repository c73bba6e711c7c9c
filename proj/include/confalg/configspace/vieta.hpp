#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "confalg/configspace/configuration.hpp"
#include "confalg/errors.hpp"
#include "confalg/exactalg/resultant.hpp"
#include "confalg/exactalg/symmetric.hpp"

namespace confalg {

template <Field F>
CoeffPoint<F> vieta_map(const Configuration<F>& q) {
  return {symmetric_expand(q.points)};
}

/// D_n(Q) = prod over unordered pairs of (q' - q'')^2.
template <class R>
R disc_points(const std::vector<R>& q) {
  R d = ring_ops<R>::one();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      R diff = q[i] - q[j];
      d = d * diff * diff;
    }
  return d;
}

template <Field F>
F disc_config(const Configuration<F>& q) {
  return disc_points(q.points);
}

/// d_n evaluated at a coefficient point.
template <Field F>
F disc_coeffs(const CoeffPoint<F>& z) {
  if (z.n() == 1) return from_int<F>(1);
  return discriminant_univariate(UniPoly<F>::monic("lambda", z.z));
}

template <Field F>
struct BarycenterSplit {
  F bc;
  Configuration<F> balanced;
};

template <Field F>
F barycenter(const Configuration<F>& q) {
  if (q.n() == 0) throw InputError("barycenter of an empty configuration");
  F s = from_int<F>(0);
  for (const auto& p : q.points) s = s + p;
  return s / from_int<F>(q.n());
}

template <Field F>
BarycenterSplit<F> barycenter_project(const Configuration<F>& q) {
  BarycenterSplit<F> out{barycenter(q), q};
  for (auto& p : out.balanced.points) p = p - out.bc;
  return out;
}

/// Coefficients of P(lambda + shift) for P = lambda^n + z_1 lambda^{n-1} + ... + z_n.
template <class R>
std::vector<R> taylor_shift(const std::vector<R>& z, const R& shift) {
  const std::size_t n = z.size();
  // Dense coefficients, index = power.
  std::vector<R> p(n + 1, ring_ops<R>::zero());
  p[n] = ring_ops<R>::one();
  for (std::size_t i = 0; i < n; ++i) p[n - 1 - i] = z[i];
  // Horner composition with (lambda + shift).
  std::vector<R> acc(n + 1, ring_ops<R>::zero());
  for (std::size_t k = n + 1; k-- > 0;) {
    for (std::size_t j = n; j >= 1; --j) acc[j] = acc[j - 1] + acc[j] * shift;
    acc[0] = acc[0] * shift + p[k];
  }
  std::vector<R> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = acc[n - 1 - i];
  return out;
}

/// Forward chart: z = coefficients of P_blc(lambda - y), P_blc = mu^n + w_2 mu^{n-2} + ... + w_n.
template <class R>
std::vector<R> chart_blc_coeffs(const std::vector<R>& w, const R& y) {
  std::vector<R> zb;
  zb.push_back(ring_ops<R>::zero());
  zb.insert(zb.end(), w.begin(), w.end());
  return taylor_shift(zb, R(-y));
}

template <Field F>
CoeffPoint<F> chart_blc(const ChartPoint<F>& c) {
  return {chart_blc_coeffs(c.w, c.y)};
}

template <Field F>
ChartPoint<F> chart_blc_inv(const CoeffPoint<F>& z) {
  if (z.n() < 1) throw InputError("empty coefficient point");
  F y = -z.z[0] / from_int<F>(z.n());
  auto shifted = taylor_shift(z.z, y);
  return {std::vector<F>(shifted.begin() + 1, shifted.end()), y};
}

enum class SpaceTag { Cn, Sigma, SC, CnBlc, SigmaBlc, SCBlc, CnCstar };

inline SpaceTag parse_space_tag(std::string_view s) {
  if (s == "Cn") return SpaceTag::Cn;
  if (s == "Sigma") return SpaceTag::Sigma;
  if (s == "SC") return SpaceTag::SC;
  if (s == "Cn_blc") return SpaceTag::CnBlc;
  if (s == "Sigma_blc") return SpaceTag::SigmaBlc;
  if (s == "SC_blc") return SpaceTag::SCBlc;
  if (s == "Cn_cstar") return SpaceTag::CnCstar;
  throw InputError("unknown space tag: " + std::string(s));
}

template <Field F>
bool membership(const CoeffPoint<F>& z, SpaceTag space, double tol = 1e-9) {
  const F d = disc_coeffs(z);
  const bool balanced = near_zero(z.z.at(0), tol);
  switch (space) {
    case SpaceTag::Cn: return !near_zero(d, tol);
    case SpaceTag::Sigma: return near_zero(d, tol);
    case SpaceTag::SC: return near(d, from_int<F>(1), tol);
    case SpaceTag::CnBlc: return balanced && !near_zero(d, tol);
    case SpaceTag::SigmaBlc: return balanced && near_zero(d, tol);
    case SpaceTag::SCBlc: return balanced && near(d, from_int<F>(1), tol);
    case SpaceTag::CnCstar: return !near_zero(d, tol) && !near_zero(z.z.back(), tol);
  }
  return false;
}

template <Field F>
bool membership(const Configuration<F>& q, SpaceTag space, double tol = 1e-9) {
  return membership(vieta_map(q), space, tol);
}

/// h_n(Q) = D_n(Q) / (q_1 ... q_n)^{n-1} on C^n(C*).
template <Field F>
F h_n(const Configuration<F>& q, double tol = 1e-12) {
  F prod = from_int<F>(1);
  for (const auto& p : q.points) {
    if (near_zero(p, tol)) throw DomainError("h_n needs nonzero points");
    prod = prod * p;
  }
  F d = disc_config(q);
  if (near_zero(d, tol)) throw DomainError("h_n needs distinct points");
  return d / power(prod, q.n() - 1);
}

}  // namespace confalg
