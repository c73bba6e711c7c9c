#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/exactalg/field.hpp"

namespace confalg {

/// Graded lexicographic comparison of exponent vectors of equal length.
struct GrLexLess {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse multivariate polynomial over a field F. The variable list is part
/// of the value; binary operations on polynomials with different lists work
/// over the union (left operand's order first).
template <Field F>
class MultiPoly {
public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, F, GrLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(const F& c, std::vector<std::string> vars = {}) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static MultiPoly variable(const std::string& name) {
    MultiPoly p({name});
    p.add_term({1}, from_int<F>(1));
    return p;
  }

  /// Variables x_1..x_count named prefix+index, starting at `first`.
  static std::vector<std::string> names(const std::string& prefix, int first, int last) {
    std::vector<std::string> out;
    for (int i = first; i <= last; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
  }
  F constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? from_int<F>(0) : it->second;
  }

  int var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }

  unsigned degree_in(const std::string& var) const {
    int i = var_index(var);
    if (i < 0) return 0;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  /// Variables that actually occur with positive exponent.
  std::vector<std::string> used_vars() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (const auto& [e, c] : terms_) {
        if (e[i] > 0) {
          out.push_back(vars_[i]);
          break;
        }
      }
    }
    return out;
  }

  void add_term(const Exponents& e, const F& c) {
    if (e.size() != vars_.size()) throw InputError("exponent vector length does not match variables");
    if (confalg::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (confalg::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Re-expresses the polynomial over `target`, which must contain every used variable.
  MultiPoly with_vars(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<int> map(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it != target.end()) map[i] = static_cast<int>(it - target.begin());
    }
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
      Exponents ne(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (map[i] < 0) throw InputError("variable " + vars_[i] + " missing from target ring");
        ne[map[i]] = e[i];
      }
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  static std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> out = a;
    for (const auto& v : b)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
      auto u = union_vars(a.vars_, b.vars_);
      return a.with_vars(u) + b.with_vars(u);
    }
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
      auto u = union_vars(a.vars_, b.vars_);
      return a.with_vars(u) * b.with_vars(u);
    }
    MultiPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend MultiPoly operator*(const F& s, const MultiPoly& p) {
    MultiPoly out(p.vars_);
    if (confalg::is_zero(s)) return out;
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& p, const F& s) { return s * p; }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(from_int<F>(1), vars_);
    MultiPoly b = *this;
    while (e > 0) {
      if (e & 1) result = result * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return result;
  }

  MultiPoly partial(const std::string& var) const {
    int i = var_index(var);
    MultiPoly out(vars_);
    if (i < 0) return out;
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents ne = e;
      ne[i] -= 1;
      out.add_term(ne, from_int<F>(static_cast<long>(e[i])) * c);
    }
    return out;
  }

  /// Full evaluation; every used variable must be assigned.
  F eval(const std::map<std::string, F>& point) const {
    std::vector<const F*> vals(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = point.find(vars_[i]);
      if (it != point.end()) vals[i] = &it->second;
    }
    F acc = from_int<F>(0);
    for (const auto& [e, c] : terms_) {
      F t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!vals[i]) throw InputError("no value for variable " + vars_[i]);
        t = t * power(*vals[i], static_cast<long>(e[i]));
      }
      acc = acc + t;
    }
    return acc;
  }

  /// Evaluation with values given positionally for `names`.
  F eval(const std::vector<std::string>& names, const std::vector<F>& values) const {
    if (names.size() != values.size()) throw InputError("arity mismatch in evaluation");
    std::map<std::string, F> point;
    for (std::size_t i = 0; i < names.size(); ++i) point.emplace(names[i], values[i]);
    return eval(point);
  }

  /// Simultaneous substitution var -> polynomial; unmapped variables stay.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const {
    std::vector<std::string> target;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (!images.count(vars_[i])) target.push_back(vars_[i]);
    for (const auto& [name, img] : images) target = union_vars(target, img.vars_);

    std::vector<MultiPoly> gens;
    gens.reserve(vars_.size());
    for (const auto& v : vars_) {
      auto it = images.find(v);
      gens.push_back(it != images.end() ? it->second.with_vars(target) : variable(v).with_vars(target));
    }
    // Cache powers per variable; substitution results are shared across terms.
    std::vector<std::vector<MultiPoly>> pow_cache(vars_.size());
    auto gen_pow = [&](std::size_t i, unsigned k) -> const MultiPoly& {
      auto& cache = pow_cache[i];
      if (cache.empty()) cache.push_back(constant(from_int<F>(1), target));
      while (cache.size() <= k) cache.push_back(cache.back() * gens[i]);
      return cache[k];
    };
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(c, target);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) t = t * gen_pow(i, e[i]);
      out += t;
    }
    return out;
  }

  MultiPoly substitute(const std::string& var, const MultiPoly& image) const {
    return substitute(std::map<std::string, MultiPoly>{{var, image}});
  }

  /// Coefficients c_k with p = sum_k c_k * var^k; c_k keeps the full variable list.
  std::vector<MultiPoly> coefficients_in(const std::string& var) const {
    int i = var_index(var);
    if (i < 0) return {*this};
    std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      unsigned k = ne[i];
      ne[i] = 0;
      out[k].add_term(ne, c);
    }
    return out;
  }

  /// Drops variables that do not occur.
  MultiPoly trimmed() const { return with_vars(used_vars()); }

  template <class G, class Fn>
  MultiPoly<G> map_coefficients(Fn&& fn) const {
    MultiPoly<G> out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto u = union_vars(a.vars_, b.vars_);
    return a.with_vars(u).terms_ == b.with_vars(u).terms_;
  }

  /// Largest coefficient magnitude; zero-tests for float-coefficient identities.
  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(to_complex(c)));
    return m;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string coeff = field_traits<F>::to_string(c);
      bool negative = !coeff.empty() && coeff.front() == '-' &&
                      coeff.find_first_of("+-", 1) == std::string::npos;
      if (negative) coeff.erase(coeff.begin());
      bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        os << coeff;
      } else {
        if (coeff != "1") os << (compound ? "(" + coeff + ")" : coeff) << "*";
        os << mono;
      }
    }
    return os.str();
  }

private:
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Exact quotient a / b; throws when b does not divide a.
template <Field F>
MultiPoly<F> divide_exact(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.vars() != b.vars()) {
    auto u = MultiPoly<F>::union_vars(a.vars(), b.vars());
    return divide_exact(a.with_vars(u), b.with_vars(u));
  }
  const auto& [lt_e, lt_c] = *b.terms().rbegin();
  MultiPoly<F> q(a.vars());
  MultiPoly<F> r = a;
  typename MultiPoly<F>::Exponents diff(lt_e.size());
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (re[i] < lt_e[i]) throw DomainError("inexact polynomial division");
      diff[i] = re[i] - lt_e[i];
    }
    MultiPoly<F> t(a.vars());
    t.add_term(diff, rc / lt_c);
    q += t;
    r -= t * b;
  }
  return q;
}

}  // namespace confalg
