#pragma once

#include <vector>

#include "confalg/configspace/vieta.hpp"
#include "confalg/coxeter/perm.hpp"
#include "confalg/errors.hpp"

namespace confalg {

/// A point of the projective line: a finite value or infinity.
template <Field F>
struct ProjPoint {
  F value{};
  bool infinite = false;

  static ProjPoint inf() { return {from_int<F>(0), true}; }
};

/// The Moebius map sending (a, b, c) to (0, 1, infinity), evaluated at z.
/// Factors containing infinity cancel in pairs and are dropped.
template <Field F>
F cross_ratio(const ProjPoint<F>& z, const ProjPoint<F>& a, const ProjPoint<F>& b, const ProjPoint<F>& c,
              double tol) {
  F num = from_int<F>(1);
  F den = from_int<F>(1);
  auto factor = [](const ProjPoint<F>& x, const ProjPoint<F>& y, F& acc) {
    if (!x.infinite && !y.infinite) acc = acc * (x.value - y.value);
  };
  factor(z, a, num);
  factor(b, c, num);
  factor(z, c, den);
  factor(b, a, den);
  if (near_zero(den, tol)) throw DomainError("degenerate cross-ratio");
  return num / den;
}

/// S(n+2) acting on ordered C^{n-1}(C**) through the slots (q'_1, ..., q'_{n-1}, 0, 1, infinity).
template <Field F>
Configuration<F> mobius_action(const Perm& sigma, const Configuration<F>& qp, double tol = 1e-12) {
  const int m = qp.n();
  if (sigma.degree() != m + 3) throw InputError("mobius_action: permutation degree must be n+2");
  const F zero = from_int<F>(0);
  const F one = from_int<F>(1);
  for (const auto& p : qp.points)
    if (near_zero(p, tol) || near(p, one, tol)) throw DomainError("mobius_action: point at 0 or 1");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (near(qp.points[i], qp.points[j], tol)) throw DomainError("mobius_action: points not distinct");

  std::vector<ProjPoint<F>> slots;
  for (const auto& p : qp.points) slots.push_back({p, false});
  slots.push_back({zero, false});
  slots.push_back({one, false});
  slots.push_back(ProjPoint<F>::inf());
  // Left action: the entry in slot i moves to slot sigma(i).
  std::vector<ProjPoint<F>> moved(slots.size());
  for (int i = 0; i < m + 3; ++i) moved[sigma(i)] = slots[i];
  Configuration<F> out({}, true);
  for (int i = 0; i < m; ++i)
    out.points.push_back(cross_ratio(moved[i], moved[m], moved[m + 1], moved[m + 2], tol));
  return out;
}

}  // namespace confalg
