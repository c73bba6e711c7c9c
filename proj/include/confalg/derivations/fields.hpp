#pragma once

#include <map>
#include <string>
#include <vector>

#include "confalg/configspace/vieta.hpp"
#include "confalg/derivations/derivation.hpp"
#include "confalg/report.hpp"

namespace confalg {

/// Vector fields on C^n_z, z = (z1..zn).
///
/// The verbatim fields are: d_tau: z_i -> (n-i+1) z_{i-1}
/// with z_0 = 1, d_t = (-z1/n) d_tau, d_s = euler - d_t. The verbatim d_tau
/// generates the root shift Q -> Q - zeta, i.e. it is eps = -1 times the
/// generator of Q -> Q + zeta. The oriented fields use eps * d_tau in place
/// of d_tau; only they satisfy all three bracket relations.
template <Field F>
struct StandardFields {
  int n = 0;
  Derivation<F> d_tau, d_t, d_s, euler;
};

template <Field F>
std::vector<std::string> z_names(int n) {
  return MultiPoly<F>::names("z", 1, n);
}

template <Field F>
Derivation<F> euler_field(int n) {
  using P = MultiPoly<F>;
  const auto names = z_names<F>(n);
  Derivation<F> e(names);
  for (int k = 1; k <= n; ++k) e.set_image(names[k - 1], P::constant(from_int<F>(k)) * P::variable(names[k - 1]));
  return e;
}

template <Field F>
Derivation<F> tau_field(int n) {
  using P = MultiPoly<F>;
  const auto names = z_names<F>(n);
  Derivation<F> d(names);
  for (int i = 1; i <= n; ++i) {
    P prev = i == 1 ? P::constant(from_int<F>(1)) : P::variable(names[i - 2]);
    d.set_image(names[i - 1], P::constant(from_int<F>(n - i + 1)) * prev);
  }
  return d;
}

/// eps = +1 gives the verbatim fields, eps = -1 the oriented ones.
template <Field F>
StandardFields<F> standard_fields(int n, int eps = 1) {
  using P = MultiPoly<F>;
  if (n < 2) throw InputError("standard fields need n >= 2");
  StandardFields<F> f;
  f.n = n;
  f.euler = euler_field<F>(n);
  f.d_tau = eps == 1 ? tau_field<F>(n) : from_int<F>(eps) * tau_field<F>(n);
  P coef = P::constant(from_rational<F>(Rational(-1, n))) * P::variable("z1");
  f.d_t = f.d_tau.replica(coef);
  f.d_s = f.euler - f.d_t;
  return f;
}

/// The balanced coordinates w2..wn as polynomials in z (coefficients of P(lambda - z1/n)).
template <Field F>
std::vector<MultiPoly<F>> balanced_coords_in_z(int n) {
  using P = MultiPoly<F>;
  std::vector<P> z;
  for (const auto& v : z_names<F>(n)) z.push_back(P::variable(v));
  P y = P::constant(from_rational<F>(Rational(-1, n))) * z[0];
  auto shifted = taylor_shift(z, y);
  return std::vector<P>(shifted.begin() + 1, shifted.end());
}

/// All exponent vectors for w2..wn of weighted degree between 1 and max_weight.
inline std::vector<std::vector<unsigned>> balanced_monomials(int n, int max_weight) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n - 1, 0);
  auto rec = [&](auto&& self, int j, int budget) -> void {
    if (j == n - 1) {
      if (budget < max_weight) out.push_back(e);
      return;
    }
    for (unsigned p = 0; static_cast<int>(p) * (j + 2) <= budget; ++p) {
      e[j] = p;
      self(self, j + 1, budget - static_cast<int>(p) * (j + 2));
    }
    e[j] = 0;
  };
  rec(rec, 0, max_weight);
  return out;
}

template <Field F>
MultiPoly<F> pulled_back_monomial(const std::vector<MultiPoly<F>>& w_of_z, const std::vector<unsigned>& e) {
  MultiPoly<F> out = MultiPoly<F>::constant(from_int<F>(1));
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j]) out = out * w_of_z[j].pow(e[j]);
  return out;
}

struct LieRelationResult {
  bool st_commute = true;   // [d_s, d_t] = 0
  bool s_replica = true;    // [d_s, b d_tau] = (d_s b) d_tau
  bool replica_t = true;    // [b d_tau, d_t] = b d_tau
  int replicas_tested = 0;
};

/// Checks the three bracket relations with b running over pulled-back
/// balanced monomials of weighted degree <= max_weight (and b = 1).
template <Field F>
LieRelationResult lie_relations(const StandardFields<F>& f, int max_weight = 6) {
  LieRelationResult r;
  r.st_commute = bracket(f.d_s, f.d_t).is_zero();
  auto w = balanced_coords_in_z<F>(f.n);
  auto monos = balanced_monomials(f.n, max_weight);
  monos.insert(monos.begin(), std::vector<unsigned>(f.n - 1, 0));
  for (const auto& e : monos) {
    MultiPoly<F> b = pulled_back_monomial(w, e);
    Derivation<F> rep = f.d_tau.replica(b);
    if (!(bracket(f.d_s, rep) == f.d_tau.replica(f.d_s.apply(b)))) r.s_replica = false;
    if (!(bracket(rep, f.d_t) == rep)) r.replica_t = false;
    ++r.replicas_tested;
  }
  return r;
}

/// Root-shift oracle: exp(zeta d_tau) z evaluated at z = vieta(q) equals
/// vieta(q + eps zeta) in Q[q1..qn, zeta], for the verbatim d_tau.
template <Field F>
bool flow_shift_identity(int n, int eps) {
  using P = MultiPoly<F>;
  auto tau = tau_field<F>(n);
  const P zeta = P::variable("zeta");
  std::vector<P> q, qs;
  for (int i = 1; i <= n; ++i) {
    q.push_back(P::variable("q" + std::to_string(i)));
    qs.push_back(q.back() + P::constant(from_int<F>(eps)) * zeta);
  }
  auto z_of_q = symmetric_expand(q);
  auto z_shift = symmetric_expand(qs);
  std::map<std::string, P> sub;
  const auto names = z_names<F>(n);
  for (int i = 0; i < n; ++i) sub.emplace(names[i], z_of_q[i]);
  for (int i = 0; i < n; ++i) {
    P flowed = exp_flow(tau, zeta, P::variable(names[i]), 2 * n + 2);
    if (!(flowed.substitute(sub) == z_shift[i])) return false;
  }
  return true;
}

/// For the verbatim fields the second and third relations hold only in the
/// sign-flipped form [b d_tau, d_t] = -b d_tau and
/// [d_s, b d_tau] = (E b) d_tau - 2 b d_tau, E the Euler field.
template <Field F>
bool verbatim_sign_relations(int n, int max_weight = 6) {
  auto f = standard_fields<F>(n, 1);
  auto w = balanced_coords_in_z<F>(n);
  auto monos = balanced_monomials(n, max_weight);
  monos.insert(monos.begin(), std::vector<unsigned>(n - 1, 0));
  for (const auto& e : monos) {
    MultiPoly<F> b = pulled_back_monomial(w, e);
    Derivation<F> rep = f.d_tau.replica(b);
    if (!(bracket(rep, f.d_t) == from_int<F>(-1) * rep)) return false;
    MultiPoly<F> coef = f.euler.apply(b) - MultiPoly<F>::constant(from_int<F>(2)) * b;
    if (!(bracket(f.d_s, rep) == f.d_tau.replica(coef))) return false;
  }
  return true;
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0.
template <Field F>
bool jacobi_holds(const Derivation<F>& x, const Derivation<F>& y, const Derivation<F>& z) {
  auto sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
  return sum.is_zero();
}

struct ChartPushforward {
  int eps = 0;               // global sign fixed by z1, 0 if inconsistent
  bool tau_consistent = false;
  bool t_consistent = false;     // verbatim d_t <-> eps * y d/dy
  bool s_oriented_euler = false; // oriented d_s <-> weighted Euler field on w
  bool s_verbatim_euler = false; // verbatim d_s <-> weighted Euler field on w
};

/// Pushes the fields through chart(w, y) = coefficients of P_blc(lambda - y).
template <Field F>
ChartPushforward chart_pushforward_check(int n) {
  using P = MultiPoly<F>;
  std::vector<std::string> cvars = P::names("w", 2, n);
  cvars.push_back("y");
  std::vector<P> w;
  for (int j = 2; j <= n; ++j) w.push_back(P::variable("w" + std::to_string(j)));
  const P y = P::variable("y");
  auto zc = chart_blc_coeffs(w, y);
  const auto names = z_names<F>(n);
  std::map<std::string, P> sub;
  for (int i = 0; i < n; ++i) sub.emplace(names[i], zc[i]);

  // Field V on (w, y) coordinates; compares (D z_k) o chart with V(z_k o chart).
  auto matches = [&](const Derivation<F>& d, const Derivation<F>& v) {
    for (int i = 0; i < n; ++i)
      if (!(d.image(names[i]).substitute(sub) == v.apply(zc[i]))) return false;
    return true;
  };
  Derivation<F> dy(cvars), ydy(cvars), euler_w(cvars);
  dy.set_image("y", P::constant(from_int<F>(1)));
  ydy.set_image("y", y);
  for (int j = 2; j <= n; ++j)
    euler_w.set_image("w" + std::to_string(j), P::constant(from_int<F>(j)) * w[j - 2]);

  ChartPushforward r;
  auto verb = standard_fields<F>(n, 1);
  auto orie = standard_fields<F>(n, -1);
  // eps from z1 alone: d_tau z1 = n, d/dy (z1 o chart) = -n.
  const F ratio = verb.d_tau.image("z1").constant_term() / dy.apply(zc[0]).constant_term();
  r.eps = ratio == from_int<F>(1) ? 1 : (ratio == from_int<F>(-1) ? -1 : 0);
  if (r.eps == 0) return r;
  r.tau_consistent = matches(verb.d_tau, from_int<F>(r.eps) * dy);
  r.t_consistent = matches(verb.d_t, from_int<F>(r.eps) * ydy);
  r.s_oriented_euler = matches(orie.d_s, euler_w);
  r.s_verbatim_euler = matches(verb.d_s, euler_w);
  return r;
}

/// d = 2z d/dy + x^n d/dz on F[x, y, z, u]; alpha = exp(u d).
struct DanielewskiReport {
  bool annihilates = false;
  bool flow_formula = false;
  bool preserves = false;
  std::vector<Rational> alpha_at_q1;
};

inline DanielewskiReport danielewski_demo(int n = 1) {
  using P = MultiPoly<Rational>;
  const std::vector<std::string> vars{"x", "y", "z", "u"};
  const P x = P::variable("x"), y = P::variable("y"), z = P::variable("z"), u = P::variable("u");
  const P xn = x.pow(n);
  Derivation<Rational> d(vars);
  d.set_image("y", P::constant(2) * z);
  d.set_image("z", xn);
  const P surface = xn * y - z * z + P::constant(1);
  DanielewskiReport r;
  r.annihilates = d.apply(surface).is_zero();
  std::map<std::string, P> alpha;
  for (const auto& v : vars) alpha.emplace(v, exp_flow(d, u, P::variable(v), 8));
  const P expect_y = y + P::constant(2) * z * u + xn * u * u;
  const P expect_z = z + xn * u;
  r.flow_formula = alpha.at("x") == x && alpha.at("y") == expect_y && alpha.at("z") == expect_z && alpha.at("u") == u;
  r.preserves = surface.substitute(alpha) == surface;
  std::map<std::string, Rational> q1{{"x", 0}, {"y", 0}, {"z", 1}, {"u", 1}};
  for (const auto& v : vars) r.alpha_at_q1.push_back(alpha.at(v).eval(q1));
  return r;
}

}  // namespace confalg
