#pragma once

#include <string>
#include <utility>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/exactalg/ring.hpp"

namespace confalg {

/// Dense univariate polynomial sum_k c[k] * var^k with coefficients in a
/// ring R (a field or MultiPoly). Trailing zero coefficients are dropped.
template <class R>
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(std::string var, std::vector<R> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) { trim(); }

  /// Monic polynomial var^n + z_1 var^{n-1} + ... + z_n.
  static UniPoly monic(std::string var, const std::vector<R>& z) {
    std::vector<R> c(z.size() + 1, ring_ops<R>::zero());
    c[z.size()] = ring_ops<R>::one();
    for (std::size_t i = 0; i < z.size(); ++i) c[z.size() - 1 - i] = z[i];
    return UniPoly(std::move(var), std::move(c));
  }

  const std::string& var() const { return var_; }
  const std::vector<R>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const R& lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == ring_ops<R>::one(); }

  R coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : ring_ops<R>::zero();
  }

  UniPoly derivative() const {
    std::vector<R> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(ring_ops<R>::from(Rational(static_cast<long>(k))) * c_[k]);
    return UniPoly(var_, std::move(d));
  }

  R eval(const R& x) const {
    R acc = ring_ops<R>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), ring_ops<R>::zero());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return UniPoly(a.var_.empty() ? b.var_ : a.var_, std::move(c));
  }
  UniPoly operator-() const {
    std::vector<R> c;
    for (const auto& x : c_) c.push_back(-x);
    return UniPoly(var_, std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_, {});
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, ring_ops<R>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(a.var_.empty() ? b.var_ : a.var_, std::move(c));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
  void trim() {
    while (!c_.empty() && ring_ops<R>::is_zero(c_.back())) c_.pop_back();
  }

  std::string var_;
  std::vector<R> c_;
};

/// Splits a multivariate polynomial into a UniPoly in `var` whose
/// coefficients are polynomials in the remaining variables.
template <Field F>
UniPoly<MultiPoly<F>> as_univariate(const MultiPoly<F>& p, const std::string& var) {
  auto parts = p.coefficients_in(var);
  std::vector<std::string> rest;
  for (const auto& v : p.vars())
    if (v != var) rest.push_back(v);
  std::vector<MultiPoly<F>> c;
  for (const auto& part : parts) c.push_back(part.with_vars(rest));
  return UniPoly<MultiPoly<F>>(var, std::move(c));
}

/// Inverse of as_univariate.
template <Field F>
MultiPoly<F> as_multivariate(const UniPoly<MultiPoly<F>>& u) {
  MultiPoly<F> x = MultiPoly<F>::variable(u.var());
  MultiPoly<F> acc;
  for (int k = u.degree(); k >= 0; --k) acc = acc * x + u.coeff(k);
  return acc;
}

}  // namespace confalg
