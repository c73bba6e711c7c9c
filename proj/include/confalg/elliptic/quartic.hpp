#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/exactalg/resultant.hpp"

namespace confalg {

/// The reduced quartic X^4 + z2 X^2 + z3 X + z4.
template <class R>
struct Quartic {
  R z2, z3, z4;
  friend bool operator==(const Quartic&, const Quartic&) = default;
};

/// (u2, u3): the depressed cubic X^3 + u2 X + u3.
template <class R>
struct BasePoint {
  R u2, u3;
  friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

/// Monic cubic X^3 + v1 X^2 + v2 X + v3.
template <class R>
struct Cubic {
  R v1, v2, v3;
  friend bool operator==(const Cubic&, const Cubic&) = default;
};

template <class R>
R quartic_discriminant(const Quartic<R>& f) {
  return discriminant_univariate(UniPoly<R>::monic("X", {ring_ops<R>::zero(), f.z2, f.z3, f.z4}));
}

template <class R>
R cubic_discriminant(const Cubic<R>& g) {
  return discriminant_univariate(UniPoly<R>::monic("X", {g.v1, g.v2, g.v3}));
}

template <class R>
Cubic<R> cubic_resolvent(const Quartic<R>& f) {
  return {-f.z2, ring_ops<R>::from(Rational(-4)) * f.z4, ring_ops<R>::from(Rational(4)) * f.z2 * f.z4 - f.z3 * f.z3};
}

/// u2 = -z2^2/3 - 4 z4, u3 = 8 z2 z4/3 - 2 z2^3/27 - z3^2.
template <class R>
BasePoint<R> tschirnhausen(const Quartic<R>& f) {
  auto c = [](long p, long q) { return ring_ops<R>::from(Rational(p, q)); };
  return {c(-1, 3) * f.z2 * f.z2 - c(4, 1) * f.z4,
          c(8, 3) * f.z2 * f.z4 - c(2, 27) * f.z2 * f.z2 * f.z2 - f.z3 * f.z3};
}

template <class R>
Cubic<R> depressed_cubic(const BasePoint<R>& p) {
  return {ring_ops<R>::zero(), p.u2, p.u3};
}

/// Projection of the surface discr f = 1 onto the base curve -(4u2^3 + 27u3^2) = 1.
template <Field F>
BasePoint<F> fibration_project(const Quartic<F>& f, double tol = 1e-10) {
  if (!near(quartic_discriminant(f), from_int<F>(1), tol)) throw DomainError("quartic is not on the surface discr f = 1");
  return tschirnhausen(f);
}

template <Field F>
struct JInvariant {
  F oracle;      // c4^3 / Delta with p = u2, q = -u3
  F displayed;   // 2^8 3^3 u2^3
  int sign = 0;  // oracle = sign * displayed, 0 if neither sign fits (or displayed = 0 and oracle != 0)
};

template <Field F>
JInvariant<F> j_invariant(const BasePoint<F>& p, double tol = 1e-10) {
  const F pp = p.u2, q = -p.u3;
  const F disc = from_int<F>(4) * pp * pp * pp + from_int<F>(27) * q * q;
  if (near_zero(disc, tol)) throw DomainError("singular fiber: 4u2^3 + 27u3^2 = 0");
  const F c4 = from_int<F>(-48) * pp;
  const F delta = from_int<F>(-16) * disc;
  JInvariant<F> j{c4 * c4 * c4 / delta, from_int<F>(6912) * pp * pp * pp, 0};
  if (near(j.oracle, j.displayed, tol)) j.sign = 1;
  else if (near(j.oracle, -j.displayed, tol)) j.sign = -1;
  return j;
}

/// (z2, z3, z4) -> (zeta^2 z2, zeta^3 z3, zeta^4 z4).
template <class R>
Quartic<R> mu12_action(const R& zeta, const Quartic<R>& f) {
  const R z2 = zeta * zeta;
  return {z2 * f.z2, z2 * zeta * f.z3, z2 * z2 * f.z4};
}

template <class R>
BasePoint<R> mu12_action_base(const R& zeta, const BasePoint<R>& p) {
  const R z2 = zeta * zeta;
  return {z2 * z2 * p.u2, z2 * z2 * z2 * p.u3};
}

inline void require_12th_root(const Complex& zeta, double tol) {
  if (std::abs(std::pow(zeta, 12) - 1.0) > tol) throw DomainError("zeta is not a 12th root of unity");
}

/// F_{a,b}(f) = X^4 + a u2 X^2 + b u3 X - (a u2)^2/12.
template <class R>
Quartic<R> counterexample_endo(const Quartic<R>& f, const R& a, const R& b) {
  const auto u = tschirnhausen(f);
  const R p = a * u.u2;
  return {p, b * u.u3, ring_ops<R>::from(Rational(-1, 12)) * p * p};
}

/// The float constants a = (3/2 delta)^{1/3}, b = (3 delta)^{1/2}, principal branches, delta = i sqrt 3.
inline std::pair<Complex, Complex> counterexample_constants() {
  const Complex delta(0.0, std::sqrt(3.0));
  return {std::pow(1.5 * delta, 1.0 / 3.0), std::sqrt(3.0 * delta)};
}

/// Chord-tangent addition on y^2 = x^3 + g2 x + g3 (affine points only).
template <Field F>
struct CurvePoint {
  F x, y;
  bool infinity = false;
};

template <Field F>
CurvePoint<F> curve_add(const CurvePoint<F>& p, const CurvePoint<F>& q, const F& g2) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  F lambda;
  if (p.x == q.x) {
    if (is_zero(p.y + q.y)) return {from_int<F>(0), from_int<F>(0), true};
    lambda = (from_int<F>(3) * p.x * p.x + g2) / (from_int<F>(2) * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  F x = lambda * lambda - p.x - q.x;
  F y = lambda * (p.x - x) - p.y;
  return {x, y, false};
}

/// Exact points of discr f = 1, z2... over Q(sqrt -3): multiples [k]P of
/// P = (0, d/3) on z3^2 = Z^3 - Z - 1/3 (the fiber over u = (-1, 1/3)),
/// lifted by z2 = -3Z/2 and z4 = -(u2 + z2^2/3)/4, then moved by mu_6.
inline std::vector<Quartic<Eisenstein>> exact_surface_points(int count) {
  using E = Eisenstein;
  const E g2(-1);
  const E u2(-1);
  const CurvePoint<E> base{E(0), E(Rational(0), Rational(1, 3)), false};
  // mu_6 = powers of (1 + d)/2.
  const E zeta6(Rational(1, 2), Rational(1, 2));
  std::vector<Quartic<E>> out;
  CurvePoint<E> p = base;
  while (static_cast<int>(out.size()) < count) {
    if (!p.infinity) {
      E z2 = E(Rational(-3, 2)) * p.x;
      E z4 = -(u2 + z2 * z2 / E(3)) / E(4);
      Quartic<E> f{z2, p.y, z4};
      E zeta(1);
      for (int r = 0; r < 6 && static_cast<int>(out.size()) < count; ++r) {
        out.push_back(mu12_action(zeta, f));
        zeta = zeta * zeta6;
      }
    }
    p = curve_add(p, base, g2);
  }
  return out;
}

}  // namespace confalg
