#pragma once

#include "confalg/exactalg/field.hpp"
#include "confalg/exactalg/multipoly.hpp"

namespace confalg {

/// Minimal commutative-ring interface shared by fields and MultiPoly, used
/// by the generic determinant and resultant code.
template <class R>
struct ring_ops;

template <Field F>
struct ring_ops<F> {
  static F zero() { return from_int<F>(0); }
  static F one() { return from_int<F>(1); }
  static F from(const Rational& q) { return from_rational<F>(q); }
  static bool is_zero(const F& x) { return confalg::is_zero(x); }
  static F exact_div(const F& a, const F& b) { return a / b; }
};

template <Field F>
struct ring_ops<MultiPoly<F>> {
  using P = MultiPoly<F>;
  static P zero() { return P(); }
  static P one() { return P::constant(from_int<F>(1)); }
  static P from(const Rational& q) { return P::constant(from_rational<F>(q)); }
  static bool is_zero(const P& x) { return x.is_zero(); }
  static P exact_div(const P& a, const P& b) { return divide_exact(a, b); }
};

}  // namespace confalg
