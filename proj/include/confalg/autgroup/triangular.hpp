#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confalg/autgroup/balanced.hpp"
#include "confalg/configspace/vieta.hpp"
#include "confalg/errors.hpp"

namespace confalg {

enum class AutSpace { Cn, SC, Sigma, Pair };

inline AutSpace parse_aut_space(std::string_view s) {
  if (s == "Cn") return AutSpace::Cn;
  if (s == "SC") return AutSpace::SC;
  if (s == "Sigma") return AutSpace::Sigma;
  if (s == "pair") return AutSpace::Pair;
  throw InputError("unknown automorphism space: " + std::string(s));
}

inline std::string_view aut_space_name(AutSpace s) {
  switch (s) {
    case AutSpace::Cn: return "Cn";
    case AutSpace::SC: return "SC";
    case AutSpace::Sigma: return "Sigma";
    case AutSpace::Pair: return "pair";
  }
  return "";
}

/// F(Q) = s Q° + t D(Q°)^k bc(Q) + b(Q°).
template <Field F>
struct TriangularAut {
  AutSpace space = AutSpace::Cn;
  int n = 0;
  F s;
  F t;
  int k = 0;
  BalancedFunction<F> b;

  F a_value(const Configuration<F>& q0) const {
    return k == 0 ? t : t * power(disc_config(q0), k);
  }
};

/// Validates the parameter constraints of each space.
template <Field F>
TriangularAut<F> make_aut(AutSpace space, int n, const F& s, const F& t, int k, BalancedFunction<F> b,
                          double tol = 1e-9) {
  if (n < 2) throw DomainError("automorphisms need n >= 2");
  if (near_zero(s, tol)) throw DomainError("s must be nonzero");
  if (near_zero(t, tol)) throw DomainError("t must be nonzero");
  if (b.n() == 0) b = BalancedFunction<F>(n);
  if (b.n() != n) throw InputError("balanced function built for a different n");
  switch (space) {
    case AutSpace::Cn: break;
    case AutSpace::SC:
      if (!near(power(s, n * (n - 1)), from_int<F>(1), tol)) throw DomainError("SC requires s^{n(n-1)}=1");
      if (k != 0) throw DomainError("SC requires k=0");
      b = b.on_unit_level();
      break;
    case AutSpace::Sigma:
      if (k != 0) throw DomainError("Sigma requires k=0");
      if (b.has_d_powers()) throw DomainError("Sigma requires b without D-powers (D vanishes there)");
      break;
    case AutSpace::Pair:
      if (k != 0) throw DomainError("pair requires k=0");
      if (b.min_m() < 0) throw DomainError("pair requires b regular on C^n (no negative D-powers)");
      break;
  }
  return {space, n, s, t, k, std::move(b)};
}

template <Field F>
bool in_aut_space(const TriangularAut<F>& f, const Configuration<F>& q, double tol) {
  const F d = disc_config(q);
  switch (f.space) {
    case AutSpace::Cn: return !near_zero(d, tol);
    case AutSpace::SC: return near(d, from_int<F>(1), tol);
    case AutSpace::Sigma: return near_zero(d, tol);
    case AutSpace::Pair: return true;
  }
  return false;
}

/// Pointwise formula without the membership check (still rejects poles).
template <Field F>
Configuration<F> evaluate_aut(const TriangularAut<F>& f, const Configuration<F>& q, double tol = 1e-12) {
  if (q.n() != f.n) throw InputError("configuration size does not match n");
  auto [bc, q0] = barycenter_project(q);
  const F a = f.a_value(q0);
  const F shift = a * bc + f.b.eval(q0, tol);
  Configuration<F> out = q0;
  for (auto& p : out.points) p = f.s * p + shift;
  return out;
}

template <Field F>
Configuration<F> apply_aut(const TriangularAut<F>& f, const Configuration<F>& q, double tol = 1e-9) {
  if (!in_aut_space(f, q, tol)) throw DomainError("configuration is not in the space " + std::string(aut_space_name(f.space)));
  return evaluate_aut(f, q, tol);
}

/// g after f.
template <Field F>
TriangularAut<F> compose(const TriangularAut<F>& g, const TriangularAut<F>& f) {
  if (g.space != f.space || g.n != f.n) throw InputError("composition needs the same space and n");
  const int nn = f.n * (f.n - 1);
  TriangularAut<F> out{f.space, f.n, g.s * f.s, g.t * f.t * power(f.s, g.k * nn), f.k + g.k, {}};
  out.b = f.b.times_unit(g.t * power(f.s, g.k * nn), g.k) + g.b.scale_arg(f.s);
  if (out.space == AutSpace::SC) out.b = out.b.on_unit_level();
  return out;
}

template <Field F>
TriangularAut<F> invert(const TriangularAut<F>& f) {
  const F one = from_int<F>(1);
  const F s_inv = one / f.s;
  const int nn = f.n * (f.n - 1);
  TriangularAut<F> out{f.space, f.n, s_inv, one / f.t * power(f.s, f.k * nn), -f.k, {}};
  out.b = f.b.times_unit(-(one / f.t), -f.k).scale_arg(s_inv);
  if (out.space == AutSpace::SC) out.b = out.b.on_unit_level();
  return out;
}

/// [fp, f] = fp^{-1} f^{-1} fp f.
template <Field F>
TriangularAut<F> commutator(const TriangularAut<F>& fp, const TriangularAut<F>& f) {
  return compose(invert(fp), compose(invert(f), compose(fp, f)));
}

template <Field F>
TriangularAut<F> identity_aut(AutSpace space, int n) {
  return {space, n, from_int<F>(1), from_int<F>(1), 0, BalancedFunction<F>(n)};
}

template <Field F>
TriangularAut<F> power(const TriangularAut<F>& f, int m) {
  TriangularAut<F> base = m < 0 ? invert(f) : f;
  TriangularAut<F> out = identity_aut<F>(f.space, f.n);
  for (int i = 0; i < std::abs(m); ++i) out = compose(base, out);
  return out;
}

template <Field F>
bool same_aut(const TriangularAut<F>& a, const TriangularAut<F>& b, double tol = 1e-9) {
  return a.space == b.space && a.n == b.n && near(a.s, b.s, tol) && near(a.t, b.t, tol) && a.k == b.k &&
         same_function(a.b, b.b, tol);
}

template <Field F>
bool is_identity(const TriangularAut<F>& f, double tol = 1e-9) {
  return same_aut(f, identity_aut<F>(f.space, f.n), tol);
}

/// Smallest m <= bound with f^m = id, if any.
template <Field F>
std::optional<int> aut_order(const TriangularAut<F>& f, int bound = 24, double tol = 1e-9) {
  TriangularAut<F> p = f;
  for (int m = 1; m <= bound; ++m) {
    if (is_identity(p, tol)) return m;
    p = compose(f, p);
  }
  return std::nullopt;
}

/// F^m(Q) = s^m Q° + t^m bc + sum_{j<m} t^{m-j-1} b(s^j Q°), for a = t, k = 0.
template <Field F>
TriangularAut<F> closed_form_power(const TriangularAut<F>& f, int m) {
  if (f.k != 0) throw DomainError("closed form needs k = 0");
  if (m < 0) throw InputError("closed form needs m >= 0");
  TriangularAut<F> out{f.space, f.n, power(f.s, m), power(f.t, m), 0, BalancedFunction<F>(f.n)};
  for (int j = 0; j < m; ++j) out.b = out.b + power(f.t, m - j - 1) * f.b.scale_arg(power(f.s, j));
  return out;
}

/// b~ = sum_{j=0}^{m-1} (m-j)/m t^{m-j-1} b(s^j .); satisfies
/// t b~ - b~(s .) = b whenever F = (s, t, b) has order dividing m.
template <Field F>
BalancedFunction<F> inversion_btilde(const BalancedFunction<F>& b, const F& s, const F& t, int m) {
  BalancedFunction<F> out(b.n());
  for (int j = 0; j < m; ++j)
    out = out + (from_rational<F>(Rational(m - j, m)) * power(t, m - j - 1)) * b.scale_arg(power(s, j));
  return out;
}

/// The verbatim variant sum_{j=0}^{m-1} (m-j)/m t^{m-j} b(s^{j-1} .), which equals
/// t b~(s^{-1} .) and so yields t b(s^{-1} .) instead of b.
template <Field F>
BalancedFunction<F> inversion_btilde_verbatim(const BalancedFunction<F>& b, const F& s, const F& t, int m) {
  BalancedFunction<F> out(b.n());
  for (int j = 0; j < m; ++j)
    out = out + (from_rational<F>(Rational(m - j, m)) * power(t, m - j)) * b.scale_arg(power(s, j - 1));
  return out;
}

/// F(Q) = s Q° + t bc + t b(Q°) - b(s Q°).
template <Field F>
TriangularAut<F> semisimple_build(AutSpace space, int n, const F& s, const F& t, const BalancedFunction<F>& b) {
  return make_aut(space, n, s, t, 0, t * b - b.scale_arg(s));
}

/// zeta -> a zeta + b.
template <Field F>
struct AffineMapOfLine {
  F a;
  F b;
  F operator()(const F& z) const { return a * z + b; }
};

/// T(Q): zeta -> s (zeta - bc) + a(Q°) bc + b(Q°); then T(Q)Q = F(Q).
template <Field F>
AffineMapOfLine<F> tame_affine_map(const TriangularAut<F>& f, const Configuration<F>& q, double tol = 1e-12) {
  auto [bc, q0] = barycenter_project(q);
  return {f.s, f.a_value(q0) * bc + f.b.eval(q0, tol) - f.s * bc};
}

/// nu(s, t): Q -> s (Q - bc) + t bc.
template <Field F>
Configuration<F> nu_torus(const F& s, const F& t, const Configuration<F>& q) {
  auto [bc, q0] = barycenter_project(q);
  for (auto& p : q0.points) p = s * p + t * bc;
  return q0;
}

/// Q -> Q + lambda b(Q°).
template <Field F>
Configuration<F> shift_action(const F& lambda, const BalancedFunction<F>& b, const Configuration<F>& q,
                              double tol = 1e-12) {
  auto [bc, q0] = barycenter_project(q);
  const F shift = lambda * b.eval(q0, tol);
  Configuration<F> out = q;
  for (auto& p : out.points) p = p + shift;
  return out;
}

/// Automorphism of (C^n, Sigma) with b polynomial in w.
template <Field F>
TriangularAut<F> relative_aut(int n, const F& s, const F& t, const BalancedFunction<F>& b) {
  if (b.has_d_powers()) throw DomainError("relative automorphism needs b polynomial in w (no D-powers)");
  return make_aut(AutSpace::Pair, n, s, t, 0, b);
}

/// The automorphism as a polynomial self-map of C^n_z: images of z1..zn.
/// Requires k >= 0 and no negative D-powers in b.
template <Field F>
std::vector<MultiPoly<F>> polynomial_map(const TriangularAut<F>& f) {
  if (f.k < 0 || f.b.min_m() < 0) throw DomainError("polynomial form needs nonnegative D-powers");
  using P = MultiPoly<F>;
  const int n = f.n;
  const auto znames = P::names("z", 1, n);
  std::vector<P> z;
  for (const auto& v : znames) z.push_back(P::variable(v).with_vars(znames));
  const P y = P::constant(from_rational<F>(Rational(-1, n))) * z[0];
  auto shifted = taylor_shift(z, y);
  std::map<std::string, P> w_of_z;
  for (int j = 2; j <= n; ++j) w_of_z.emplace("w" + std::to_string(j), shifted[j - 1]);

  auto [bp, shift] = f.b.to_polynomial();
  (void)shift;
  const P d = balanced_discriminant<F>(n);
  P a = P::constant(f.t) * d.pow(static_cast<unsigned>(f.k));
  std::vector<P> wp;
  for (int j = 2; j <= n; ++j) wp.push_back(P::constant(power(f.s, j)) * shifted[j - 1]);
  P yp = a.substitute(w_of_z) * y + bp.substitute(w_of_z);
  auto out = chart_blc_coeffs(wp, yp);
  for (auto& p : out) p = p.with_vars(P::union_vars(znames, p.vars())).trimmed();
  return out;
}

}  // namespace confalg
