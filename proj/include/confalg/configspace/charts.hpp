#pragma once

#include <utility>
#include <vector>

#include "confalg/configspace/vieta.hpp"
#include "confalg/errors.hpp"

namespace confalg {

/// phi: a balanced configuration {q_1..q_{n-2}, u, u} with exactly one
/// double point goes to {q_i - u} in C^{n-2}(C*).
template <Field F>
Configuration<F> sigma_blc_phi(const Configuration<F>& q, double tol = 1e-12) {
  const int n = q.n();
  if (n < 3) throw DomainError("phi needs n >= 3");
  int a = -1, b = -1;
  for (int i = 0; i < n && a < 0; ++i)
    for (int j = i + 1; j < n; ++j)
      if (near(q.points[i], q.points[j], tol)) {
        a = i;
        b = j;
        break;
      }
  if (a < 0) throw DomainError("phi: configuration has no double point");
  const F u = q.points[a];
  std::vector<F> rest;
  for (int i = 0; i < n; ++i)
    if (i != a && i != b) rest.push_back(q.points[i]);
  F sum = from_int<F>(0);
  for (const auto& p : rest) sum = sum + p;
  if (!near(u, -sum / from_int<F>(2), tol)) throw DomainError("phi: configuration is not balanced");
  Configuration<F> out;
  for (const auto& p : rest) {
    if (near(p, u, tol)) throw DomainError("phi: double point has multiplicity > 2");
    out.points.push_back(p - u);
  }
  if (near_zero(disc_config(out), tol)) throw DomainError("phi: remaining points are not distinct");
  return out;
}

/// psi = phi^{-1}: Q' in C^{n-2}(C*) goes to {q'_i + v, v, v} with v = -(1/n) sum q'.
template <Field F>
Configuration<F> sigma_blc_psi(const Configuration<F>& qp, double tol = 1e-12) {
  const int n = qp.n() + 2;
  F sum = from_int<F>(0);
  for (const auto& p : qp.points) {
    if (near_zero(p, tol)) throw DomainError("psi: point at the origin");
    sum = sum + p;
  }
  if (near_zero(disc_config(qp), tol)) throw DomainError("psi: points are not distinct");
  const F v = -sum / from_int<F>(n);
  Configuration<F> out;
  for (const auto& p : qp.points) out.points.push_back(p + v);
  out.points.push_back(v);
  out.points.push_back(v);
  return out;
}

template <Field F>
void require_cstar_ordered(const Configuration<F>& q, double tol, const char* what) {
  for (const auto& p : q.points)
    if (near_zero(p, tol)) throw DomainError(std::string(what) + ": point at the origin");
  if (q.n() > 1 && near_zero(disc_config(q), tol))
    throw DomainError(std::string(what) + ": points are not distinct");
}

template <Field F>
struct EtaImage {
  Configuration<F> ratios;  // (q_1/q_n, ..., q_{n-1}/q_n)
  F y;                      // q_n
};

template <Field F>
EtaImage<F> eta(const Configuration<F>& q, double tol = 1e-12) {
  require_cstar_ordered(q, tol, "eta");
  const F y = q.points.back();
  EtaImage<F> out{Configuration<F>({}, true), y};
  for (int i = 0; i + 1 < q.n(); ++i) out.ratios.points.push_back(q.points[i] / y);
  return out;
}

template <Field F>
Configuration<F> eta_inv(const EtaImage<F>& e) {
  Configuration<F> out({}, true);
  for (const auto& p : e.ratios.points) out.points.push_back(e.y * p);
  out.points.push_back(e.y);
  return out;
}

/// phi~: ordered C^n(C*) into ordered balanced C^{n+1}.
template <Field F>
Configuration<F> phi_tilde(const Configuration<F>& q, double tol = 1e-12) {
  require_cstar_ordered(q, tol, "phi_tilde");
  const int n = q.n();
  const F c = from_rational<F>(Rational(n, n + 1)) * barycenter(q);
  Configuration<F> out({}, true);
  for (const auto& p : q.points) out.points.push_back(p - c);
  out.points.push_back(-c);
  return out;
}

template <Field F>
Configuration<F> phi_tilde_inv(const Configuration<F>& q) {
  if (q.n() < 2) throw DomainError("phi_tilde_inv needs at least two points");
  const F last = q.points.back();
  Configuration<F> out({}, true);
  for (int i = 0; i + 1 < q.n(); ++i) out.points.push_back(q.points[i] - last);
  return out;
}

enum class Involution { Iota, TauInv, Upsilon, SigmaPrime, Rho };

/// The involutions of ordered C^n(C*).
template <Field F>
Configuration<F> involution(const Configuration<F>& q, Involution which, double tol = 1e-12) {
  require_cstar_ordered(q, tol, "involution");
  const int n = q.n();
  const F one = from_int<F>(1);
  const F qn = q.points.back();
  Configuration<F> out({}, true);
  switch (which) {
    case Involution::Iota:
      for (const auto& p : q.points) out.points.push_back(one / p);
      break;
    case Involution::TauInv:
      for (const auto& p : q.points) out.points.push_back(p / (qn * qn));
      break;
    case Involution::Upsilon:
      for (const auto& p : q.points) out.points.push_back(qn * qn / p);
      break;
    case Involution::SigmaPrime: {
      if (n < 2) throw DomainError("sigma' needs n >= 2");
      const F c = qn / q.points[n - 2];
      out.points = q.points;
      std::swap(out.points[n - 2], out.points[n - 1]);
      for (auto& p : out.points) p = c * p;
      break;
    }
    case Involution::Rho:
      for (int i = 0; i + 1 < n; ++i) out.points.push_back(q.points[i] - qn);
      out.points.push_back(-qn);
      break;
  }
  return out;
}

/// U(z_1, z_2) = (z_1, z_1^2/4 - z_2) on C^2.
template <class R>
std::pair<R, R> involution_U(const R& z1, const R& z2) {
  return {z1, z1 * z1 * ring_ops<R>::from(Rational(1, 4)) - z2};
}

}  // namespace confalg
