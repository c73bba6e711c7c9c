#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "confalg/configspace/vieta.hpp"
#include "confalg/errors.hpp"
#include "confalg/exactalg/resultant.hpp"

namespace confalg {

/// d_n restricted to the balanced slice, as a polynomial in w2..wn.
/// Results are cached per (field, n).
template <Field F>
const MultiPoly<F>& balanced_discriminant(int n) {
  static std::mutex mu;
  static std::map<int, MultiPoly<F>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<MultiPoly<F>> w{MultiPoly<F>()};
  for (int j = 2; j <= n; ++j) w.push_back(MultiPoly<F>::variable("w" + std::to_string(j)));
  MultiPoly<F> d = n == 1 ? MultiPoly<F>::constant(from_int<F>(1))
                          : discriminant_univariate(UniPoly<MultiPoly<F>>::monic("lambda", w));
  return cache.emplace(n, d.with_vars(MultiPoly<F>::names("w", 2, n))).first->second;
}

/// Power sums p_0..p_max of the roots of a balanced polynomial with
/// coefficients w2..wn (Newton identities); works over any ring R.
template <class R>
std::vector<R> balanced_power_sums(const std::vector<R>& w, int max) {
  const int n = static_cast<int>(w.size()) + 1;
  // e_k = (-1)^k z_k with z_1 = 0, z_j = w_j.
  auto e = [&](int k) -> R {
    if (k < 2 || k > n) return ring_ops<R>::zero();
    return k % 2 ? R(-w[k - 2]) : w[k - 2];
  };
  std::vector<R> p(max + 1, ring_ops<R>::zero());
  p[0] = ring_ops<R>::from(Rational(n));
  for (int k = 1; k <= max; ++k) {
    R acc = ring_ops<R>::zero();
    for (int i = 1; i < k; ++i) {
      R term = e(i) * p[k - i];
      acc = i % 2 ? acc + term : acc - term;
    }
    R last = ring_ops<R>::from(Rational(k)) * e(k);
    acc = k % 2 ? acc + last : acc - last;
    p[k] = acc;
  }
  return p;
}

inline Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i, i);
  return r;
}

/// One summand of a balanced function: c * w^e * D^m, or c * S_{2r} * D^m
/// where S_{2r}(Q) sums (q' - q'')^{2r} over ordered pairs of points.
template <Field F>
struct BalancedTerm {
  F c;
  bool is_s = false;
  std::vector<unsigned> w_exp;  // exponents of w2..wn
  int s_power = 0;              // the even exponent 2r
  int m = 0;

  auto key() const { return std::tie(is_s, w_exp, s_power, m); }

  /// Weighted degree: w_j has weight j, S_{2r} weight 2r, D weight n(n-1).
  int weight(int n) const {
    int wt = m * n * (n - 1);
    if (is_s) return wt + s_power;
    for (std::size_t j = 0; j < w_exp.size(); ++j) wt += static_cast<int>((j + 2) * w_exp[j]);
    return wt;
  }
};

/// A regular function on the balanced slice, closed under the scaling
/// Q -> sQ and under multiplication by t * D^k.
template <Field F>
class BalancedFunction {
public:
  BalancedFunction() = default;
  explicit BalancedFunction(int n) : n_(n) {}

  static BalancedFunction constant(int n, const F& c) {
    return w_monomial(n, c, std::vector<unsigned>(n - 1, 0), 0);
  }
  static BalancedFunction w_monomial(int n, const F& c, std::vector<unsigned> exps, int m = 0) {
    if (static_cast<int>(exps.size()) != n - 1) throw InputError("w exponent vector must have n-1 entries");
    BalancedFunction b(n);
    b.add({c, false, std::move(exps), 0, m});
    return b;
  }
  static BalancedFunction s_term(int n, const F& c, int two_r, int m = 0) {
    if (two_r <= 0 || two_r % 2) throw InputError("S term needs a positive even exponent");
    BalancedFunction b(n);
    b.add({c, true, {}, two_r, m});
    return b;
  }

  int n() const { return n_; }
  const std::vector<BalancedTerm<F>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int min_m() const {
    int lo = 0;
    for (const auto& t : terms_) lo = std::min(lo, t.m);
    return lo;
  }
  bool has_d_powers() const {
    for (const auto& t : terms_)
      if (t.m != 0) return true;
    return false;
  }

  void add(BalancedTerm<F> term) {
    if (is_zero(term.c)) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      if (it->key() == term.key()) {
        it->c = it->c + term.c;
        if (is_zero(it->c)) terms_.erase(it);
        return;
      }
    }
    terms_.push_back(std::move(term));
  }

  friend BalancedFunction operator+(const BalancedFunction& a, const BalancedFunction& b) {
    BalancedFunction out = a;
    if (out.n_ == 0) out.n_ = b.n_;
    for (const auto& t : b.terms_) out.add(t);
    return out;
  }
  friend BalancedFunction operator*(const F& s, const BalancedFunction& b) {
    BalancedFunction out(b.n_);
    for (auto t : b.terms_) {
      t.c = s * t.c;
      out.add(std::move(t));
    }
    return out;
  }
  BalancedFunction operator-() const { return from_int<F>(-1) * *this; }
  friend BalancedFunction operator-(const BalancedFunction& a, const BalancedFunction& b) { return a + (-b); }

  /// Product with t * D^k.
  BalancedFunction times_unit(const F& t, int k) const {
    BalancedFunction out(n_);
    for (auto term : terms_) {
      term.c = t * term.c;
      term.m += k;
      out.add(std::move(term));
    }
    return out;
  }

  /// The function Q -> b(sQ).
  BalancedFunction scale_arg(const F& s) const {
    BalancedFunction out(n_);
    for (auto term : terms_) {
      term.c = term.c * power(s, term.weight(n_));
      out.add(std::move(term));
    }
    return out;
  }

  /// Drops D-powers; valid on the level D = 1.
  BalancedFunction on_unit_level() const {
    BalancedFunction out(n_);
    for (auto term : terms_) {
      term.m = 0;
      out.add(std::move(term));
    }
    return out;
  }

  /// Evaluation at a balanced configuration.
  F eval(const Configuration<F>& q0, double tol = 1e-12) const {
    if (terms_.empty()) return from_int<F>(0);
    if (q0.n() != n_) throw InputError("balanced function evaluated at a configuration of the wrong size");
    auto z = vieta_map(q0).z;
    const F d = disc_config(q0);
    F acc = from_int<F>(0);
    for (const auto& t : terms_) {
      if (t.m < 0 && near_zero(d, tol)) throw DomainError("pole of balanced function: D = 0");
      F v = t.c * power(d, t.m);
      if (t.is_s) {
        F s = from_int<F>(0);
        for (const auto& a : q0.points)
          for (const auto& b : q0.points) s = s + power(F(a - b), t.s_power);
        v = v * s;
      } else {
        for (std::size_t j = 0; j < t.w_exp.size(); ++j)
          if (t.w_exp[j]) v = v * power(z[j + 1], static_cast<long>(t.w_exp[j]));
      }
      acc = acc + v;
    }
    return acc;
  }

  /// The function as P / D^shift with P a polynomial in w2..wn; shift = -min_m.
  std::pair<MultiPoly<F>, int> to_polynomial() const {
    const auto names = MultiPoly<F>::names("w", 2, n_);
    const int shift = -min_m();
    std::vector<MultiPoly<F>> w;
    for (const auto& v : names) w.push_back(MultiPoly<F>::variable(v));
    int max_s = 0;
    for (const auto& t : terms_)
      if (t.is_s) max_s = std::max(max_s, t.s_power);
    std::vector<MultiPoly<F>> p = balanced_power_sums(w, max_s);
    MultiPoly<F> out(names);
    const MultiPoly<F>& d = balanced_discriminant<F>(n_);
    for (const auto& t : terms_) {
      MultiPoly<F> v = MultiPoly<F>::constant(t.c, names);
      if (t.is_s) {
        // S_{2r} = sum_k C(2r,k) (-1)^k p_{2r-k} p_k.
        MultiPoly<F> s(names);
        for (int k = 0; k <= t.s_power; ++k) {
          F coeff = from_rational<F>(binomial(t.s_power, k) * Rational(k % 2 ? -1 : 1));
          s += coeff * (p[t.s_power - k] * p[k]);
        }
        v = v * s;
      } else {
        MultiPoly<F> mono(names);
        mono.add_term(t.w_exp, from_int<F>(1));
        v = v * mono;
      }
      out += v * d.pow(static_cast<unsigned>(t.m + shift));
    }
    return {out.with_vars(names), shift};
  }

private:
  int n_ = 0;
  std::vector<BalancedTerm<F>> terms_;
};

/// Equality as functions on the balanced slice (exact fields) or up to a
/// coefficient tolerance (floats).
template <Field F>
bool same_function(const BalancedFunction<F>& a, const BalancedFunction<F>& b, double tol = 1e-9) {
  if (a.n() != b.n() && !(a.empty() || b.empty())) return false;
  const int n = std::max(a.n(), b.n());
  if (n == 0) return true;
  BalancedFunction<F> diff = a - b;
  if (diff.n() == 0) return true;
  auto [p, shift] = diff.to_polynomial();
  (void)shift;
  if constexpr (is_exact_v<F>) {
    (void)tol;
    return p.is_zero();
  } else {
    return p.max_abs_coefficient() <= tol;
  }
}

}  // namespace confalg
