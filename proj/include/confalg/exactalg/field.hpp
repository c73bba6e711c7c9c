#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include "confalg/exactalg/quadext.hpp"
#include "confalg/exactalg/rational.hpp"

namespace confalg {

using Complex = std::complex<double>;

/// Per-field facts: exactness, tag used in serialization, embeddings.
template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view tag = "Q";
  static Rational from_rational(const Rational& q) { return q; }
  static Complex to_complex(const Rational& x) { return {x.to_double(), 0.0}; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
  static Rational parse(std::string_view s) { return Rational::parse(s); }
  static bool less(const Rational& a, const Rational& b) { return a < b; }
};

template <int D>
struct field_traits<QuadExt<D>> {
  static constexpr bool exact = true;
  static constexpr std::string_view tag = D == -1 ? "Q(i)" : "Q(sqrt-3)";
  static QuadExt<D> from_rational(const Rational& q) { return QuadExt<D>(q); }
  static Complex to_complex(const QuadExt<D>& x) { return x.to_complex(); }
  static bool is_zero(const QuadExt<D>& x) { return x.is_zero(); }
  static std::string to_string(const QuadExt<D>& x) { return x.to_string(); }
  static QuadExt<D> parse(std::string_view s) { return QuadExt<D>::parse(s); }
  static bool less(const QuadExt<D>& a, const QuadExt<D>& b) { return a < b; }
};

template <>
struct field_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr std::string_view tag = "C";
  static Complex from_rational(const Rational& q) { return {q.to_double(), 0.0}; }
  static Complex to_complex(const Complex& x) { return x; }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static std::string to_string(const Complex& x) {
    return "[" + std::to_string(x.real()) + ", " + std::to_string(x.imag()) + "]";
  }
  static bool less(const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  }
};

template <class F>
concept Field = requires(const F& a, const F& b) {
  { field_traits<F>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
};

template <Field F>
inline constexpr bool is_exact_v = field_traits<F>::exact;

template <Field F>
F from_rational(const Rational& q) {
  return field_traits<F>::from_rational(q);
}

template <Field F>
F from_int(long v) {
  return field_traits<F>::from_rational(Rational(v));
}

template <Field F>
bool is_zero(const F& x) {
  return field_traits<F>::is_zero(x);
}

template <Field F>
Complex to_complex(const F& x) {
  return field_traits<F>::to_complex(x);
}

/// Exact equality for exact fields; relative-absolute tolerance for floats.
template <Field F>
bool near(const F& a, const F& b, double tol) {
  if constexpr (is_exact_v<F>) {
    (void)tol;
    return a == b;
  } else {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
  }
}

template <Field F>
bool near_zero(const F& a, double tol) {
  if constexpr (is_exact_v<F>) {
    (void)tol;
    return is_zero(a);
  } else {
    return std::abs(a) <= tol;
  }
}

/// Integer power; negative exponents invert.
template <Field F>
F power(const F& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw DomainError("negative power of zero");
    return power(F(from_int<F>(1) / base), -e);
  }
  F result = from_int<F>(1);
  F b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

}  // namespace confalg
