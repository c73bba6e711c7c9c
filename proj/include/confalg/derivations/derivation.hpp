#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/exactalg/multipoly.hpp"

namespace confalg {

/// A derivation of F[vars], given by the images of the generators and
/// extended by linearity and the Leibniz rule.
template <Field F>
class Derivation {
public:
  using Poly = MultiPoly<F>;

  Derivation() = default;
  explicit Derivation(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_) images_[v] = Poly(vars_);
  }
  Derivation(std::vector<std::string> vars, std::map<std::string, Poly> images) : Derivation(std::move(vars)) {
    for (auto& [v, p] : images) {
      if (!images_.count(v)) throw InputError("image given for unknown variable " + v);
      images_[v] = std::move(p);
    }
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Poly& image(const std::string& v) const { return images_.at(v); }
  void set_image(const std::string& v, Poly p) {
    if (!images_.count(v)) throw InputError("unknown variable " + v);
    images_[v] = std::move(p);
  }

  Poly apply(const Poly& f) const {
    for (const auto& v : f.used_vars())
      if (!images_.count(v)) throw InputError("derivation has no image for variable " + v);
    Poly out;
    for (const auto& v : vars_) {
      const Poly& img = images_.at(v);
      if (img.is_zero()) continue;
      Poly d = f.partial(v);
      if (!d.is_zero()) out += d * img;
    }
    return out;
  }

  /// The replica f * this.
  Derivation replica(const Poly& f) const {
    Derivation out(vars_);
    for (const auto& v : vars_) out.images_[v] = f * images_.at(v);
    return out;
  }

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    a.require_same(b);
    Derivation out(a.vars_);
    for (const auto& v : a.vars_) out.images_[v] = a.images_.at(v) + b.images_.at(v);
    return out;
  }
  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    a.require_same(b);
    Derivation out(a.vars_);
    for (const auto& v : a.vars_) out.images_[v] = a.images_.at(v) - b.images_.at(v);
    return out;
  }
  friend Derivation operator*(const F& c, const Derivation& d) { return d.replica(Poly::constant(c)); }

  /// Equality of images as polynomials.
  friend bool operator==(const Derivation& a, const Derivation& b) {
    if (a.vars_ != b.vars_) return false;
    for (const auto& v : a.vars_)
      if (!(a.images_.at(v) == b.images_.at(v))) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& [v, p] : images_)
      if (!p.is_zero()) return false;
    return true;
  }

private:
  void require_same(const Derivation& o) const {
    if (vars_ != o.vars_) throw InputError("derivations over different variable lists");
  }

  std::vector<std::string> vars_;
  std::map<std::string, Poly> images_;
};

/// [d1, d2](x) = d1(d2 x) - d2(d1 x).
template <Field F>
Derivation<F> bracket(const Derivation<F>& d1, const Derivation<F>& d2) {
  if (d1.vars() != d2.vars()) throw InputError("bracket of derivations over different variable lists");
  Derivation<F> out(d1.vars());
  for (const auto& v : d1.vars()) out.set_image(v, d1.apply(d2.image(v)) - d2.apply(d1.image(v)));
  return out;
}

template <Field F>
struct NilpotencyReport {
  bool nilpotent = false;
  std::map<std::string, int> depth;  // smallest k with d^k x = 0
  std::optional<std::string> eigen_var;
  std::optional<F> eigen_value;      // d x = c x
};

/// Iterates d on every generator up to `bound` times.
template <Field F>
NilpotencyReport<F> lnd_check(const Derivation<F>& d, int bound) {
  NilpotencyReport<F> r;
  r.nilpotent = true;
  for (const auto& v : d.vars()) {
    MultiPoly<F> x = MultiPoly<F>::variable(v);
    const MultiPoly<F>& dx = d.image(v);
    if (!dx.is_zero() && !r.eigen_var) {
      // d x = c x for a constant c?
      auto coeffs = dx.coefficients_in(v);
      if (coeffs.size() == 2 && coeffs[0].is_zero() && coeffs[1].is_constant() && dx.used_vars().size() == 1) {
        r.eigen_var = v;
        r.eigen_value = coeffs[1].constant_term();
      }
    }
    int k = 0;
    while (!x.is_zero() && k <= bound) {
      x = d.apply(x);
      ++k;
    }
    if (x.is_zero()) r.depth[v] = k;
    else r.nilpotent = false;
  }
  return r;
}

/// exp(lambda d) f = sum_k lambda^k d^k f / k!; requires d^k f = 0 within bound.
template <Field F>
MultiPoly<F> exp_flow(const Derivation<F>& d, const MultiPoly<F>& lambda, const MultiPoly<F>& f, int bound) {
  MultiPoly<F> out = f;
  MultiPoly<F> term = f;
  MultiPoly<F> lam_pow = MultiPoly<F>::constant(from_int<F>(1));
  F fact = from_int<F>(1);
  for (int k = 1;; ++k) {
    term = d.apply(term);
    if (term.is_zero()) return out;
    if (k > bound) throw DomainError("derivation is not locally nilpotent within the bound");
    lam_pow = lam_pow * lambda;
    fact = fact * from_int<F>(k);
    out += (from_int<F>(1) / fact) * (lam_pow * term);
  }
}

}  // namespace confalg
