#pragma once

#include <map>
#include <string>
#include <vector>

#include "confalg/configspace/charts.hpp"
#include "confalg/configspace/roots.hpp"
#include "confalg/configspace/vieta.hpp"
#include "confalg/derivations/fields.hpp"
#include "confalg/exactalg/resultant.hpp"
#include "confalg/random.hpp"
#include "confalg/verify/common.hpp"

namespace confalg::verify {

inline Report discr_chain(const Options& o) {
  using G = Gaussian;
  using P = MultiPoly<Rational>;
  Report r;
  Rng rng(stream(o, 1));
  const std::string a_prod = "discriminant equals the product of squared root differences";
  for (int n : n_range(o, 2, 5, "discr-chain")) {
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      auto q = random_any<G>(rng, n);
      if (!(disc_coeffs(vieta_map(q)) == disc_config(q))) ++bad;
    }
    r.push_back({"d_n(vieta(Q)) = prod (q_i - q_j)^2 on 200 Gaussian configurations, " + ns(n), a_prod, bad == 0,
                 std::to_string(bad) + " mismatches"});
  }
  const P z1 = P::variable("z1"), z2 = P::variable("z2"), z3 = P::variable("z3");
  auto d2 = universal_discriminant<Rational>(2);
  r.push_back({"symbolic d_2 = z1^2 - 4 z2", a_prod, d2 == z1 * z1 - P::constant(4) * z2, d2.to_string()});
  auto d3 = universal_discriminant<Rational>(3);
  P d3_classical = P::constant(18) * z1 * z2 * z3 - P::constant(4) * z1.pow(3) * z3 + z1 * z1 * z2 * z2 -
                 P::constant(4) * z2.pow(3) - P::constant(27) * z3 * z3;
  r.push_back({"symbolic d_3 matches the classical cubic discriminant", "tangent to the level hypersurfaces of d_n",
               d3 == d3_classical, d3.to_string()});

  using UP = UniPoly<P>;
  auto res = resultant(UP("l", {z2, z1, P::constant(1)}), UP("l", {z1, P::constant(2)}));
  r.push_back({"Res(l^2 + z1 l + z2, 2l + z1) = 4 z2 - z1^2", "Sylvester resultant",
               res == P::constant(4) * z2 - z1 * z1, res.to_string()});
  using UQ = UniPoly<Rational>;
  auto r9 = resultant(UQ("l", {-1, 0, 1}), UQ("l", {-4, 0, 1}));
  r.push_back({"Res(l^2 - 1, l^2 - 4) = 9", "Sylvester resultant", r9 == Rational(9), r9.to_string()});
  auto d123 = discriminant_univariate(UQ("l", {-6, 11, -6, 1}));
  auto d4 = discriminant_univariate(UQ("l", {-1, 0, 0, 0, 1}));
  auto dq = disc_config(Configuration<G>({G(1), G(-1), G(0, 1), G(0, -1)}));
  r.push_back({"disc(l^3-6l^2+11l-6) = 4, disc(l^4-1) = -256 = D({1,-1,i,-i})", a_prod,
               d123 == Rational(4) && d4 == Rational(-256) && dq == G(-256),
               d123.to_string() + ", " + d4.to_string() + ", " + dq.to_string()});

  // Balanced chart round trip.
  int bad_chart = 0;
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i < 20; ++i) {
      ChartPoint<G> c;
      for (int j = 2; j <= n; ++j) c.w.push_back(random_scalar<G>(rng));
      c.y = random_scalar<G>(rng);
      CoeffPoint<G> z;
      for (int j = 0; j < n; ++j) z.z.push_back(random_scalar<G>(rng));
      if (!(chart_blc_inv(chart_blc(c)) == c) || !(chart_blc(chart_blc_inv(z)) == z)) ++bad_chart;
    }
  r.push_back({"balanced chart and its inverse round-trip exactly, n <= 6", "balanced cylinder coordinates",
               bad_chart == 0, std::to_string(bad_chart) + " failures"});

  // Membership.
  using E = Eisenstein;
  Configuration<Rational> sym({-1, 0, 1});
  CoeffPoint<E> surf{{E(0), E(0), E(Rational(0), Rational(1, 3)), E(Rational(1, 4))}};
  bool mem = membership(sym, SpaceTag::Cn) && membership(sym, SpaceTag::CnBlc) && !membership(sym, SpaceTag::SC) &&
             membership(surf, SpaceTag::SCBlc) && membership(Configuration<Rational>({2, 2, 5}), SpaceTag::Sigma);
  r.push_back({"membership: {-1,0,1} in C^3_blc not SC; (0, d/3, 1/4) in SC_blc; repeated point in Sigma",
               "special configuration space", mem, "D({-1,0,1}) = " + disc_config(sym).to_string()});

  // Numeric roots.
  auto roots = roots_numeric({Complex(-6), Complex(11), Complex(-6)});
  bool roots_ok = same_configuration(roots, Configuration<Complex>({Complex(1), Complex(2), Complex(3)}), 1e-12);
  auto r4 = roots_numeric({Complex(0), Complex(0), Complex(0), Complex(-1)});
  roots_ok = roots_ok && same_configuration(r4, Configuration<Complex>({Complex(1), Complex(-1), Complex(0, 1), Complex(0, -1)}), 1e-12);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    auto q = random_distinct<Complex>(rng, 2 + static_cast<int>(rng.uniform(0, 6)));
    auto back = roots_numeric(vieta_map(q).z);
    for (std::size_t k = 0; k < q.points.size(); ++k) {
      double best = 1e300;
      for (const auto& x : back.points) best = std::min(best, std::abs(x - q.points[k]));
      worst = std::max(worst, best);
    }
  }
  roots_ok = roots_ok && worst < 1e-8;
  r.push_back({"roots_numeric inverts the Vieta map (degree <= 8)", "Vieta projection", roots_ok,
               "max root error " + sci(worst)});
  return r;
}

inline Report lie_relations(const Options& o) {
  using Q = Rational;
  Report r;
  const std::string a_rel = "bracket relations of the tau, t, s fields";
  for (int n : n_range(o, 2, 6, "lie-relations")) {
    auto orient = lie_relations(standard_fields<Q>(n, -1));
    r.push_back({"[d_s, d_t] = 0, " + ns(n), a_rel, orient.st_commute, ""});
    r.push_back({"[d_s, b d_tau] = (d_s b) d_tau, " + ns(n), a_rel, orient.s_replica,
                 std::to_string(orient.replicas_tested) + " replicas, eps-oriented d_tau"});
    r.push_back({"[b d_tau, d_t] = b d_tau, " + ns(n), a_rel, orient.replica_t,
                 std::to_string(orient.replicas_tested) + " replicas, eps-oriented d_tau"});
    r.push_back({"verbatim fields satisfy the relations only with the sign of eps, " + ns(n),
                 "sign of d_tau against the shift action", verbatim_sign_relations<Q>(n),
                 "[b d_tau, d_t] = -b d_tau and [d_s, b d_tau] = (E b - 2b) d_tau for the verbatim d_tau"});
    auto c = chart_pushforward_check<Q>(n);
    r.push_back({"chart pushforward has one global sign eps, " + ns(n), "infinitesimal generator of the shift",
                 c.eps == -1 && c.tau_consistent && c.t_consistent && c.s_oriented_euler,
                 "eps = " + std::to_string(c.eps) + "; d_tau -> eps d/dy, d_t -> eps y d/dy, oriented d_s -> Euler on w" +
                     (c.s_verbatim_euler ? "" : " (verbatim d_s -> Euler on w + 2y d/dy)")});
  }
  for (int n : n_range(o, 2, 5, "lie-relations")) {
    auto d = universal_discriminant<Q>(n);
    auto f = standard_fields<Q>(n, 1);
    r.push_back({"d_tau d_n = 0 and d_t d_n = 0, " + ns(n), "d_tau is tangent to the levels of d_n",
                 f.d_tau.apply(d).is_zero() && f.d_t.apply(d).is_zero(), std::to_string(d.num_terms()) + " terms in d_n"});
  }
  {
    using P = MultiPoly<Q>;
    auto f = standard_fields<Q>(3, 1);
    bool images = f.d_tau.image("z1") == P::constant(3) && f.d_tau.image("z2") == P::constant(2) * P::variable("z1") &&
                  f.d_tau.image("z3") == P::variable("z2");
    bool euler = f.d_s + f.d_t == f.euler;
    r.push_back({"n=3 d_tau: z1 -> 3, z2 -> 2 z1, z3 -> z2; d_s + d_t = Euler", "coordinates z with z_0 = 1",
                 images && euler, ""});
    auto f4 = standard_fields<Q>(4, 1);
    auto l = lnd_check(f4.d_tau, 2 * 4 + 2);
    bool depth = l.nilpotent;
    for (int k = 1; k <= 4; ++k) depth = depth && l.depth["z" + std::to_string(k)] == k + 1;
    auto lt = lnd_check(f4.d_t, 10);
    bool witness = !lt.nilpotent && lt.eigen_var == "z1" && lt.eigen_value == Q(-1);
    auto lz = lnd_check(Derivation<Q>(z_names<Q>(4)), 10);
    bool zero = lz.nilpotent && lz.depth["z1"] == 1;
    r.push_back({"local nilpotency: d_tau depth k+1 on z_k; d_t z1 = -z1; zero field depth 1", "locally nilpotent derivation",
                 depth && witness && zero, ""});
  }
  Rng rng(stream(o, 2));
  int jac_bad = 0, anti_bad = 0, tested = 0;
  for (int n : n_range(o, 2, 4, "lie-relations")) {
    auto f = standard_fields<Q>(n, -1);
    auto w = balanced_coords_in_z<Q>(n);
    auto monos = balanced_monomials(n, 4);
    std::vector<Derivation<Q>> pool{f.d_tau, f.d_t, f.d_s};
    for (const auto& e : monos) pool.push_back(f.d_tau.replica(pulled_back_monomial(w, e)));
    for (int i = 0; i < 10; ++i) {
      const auto& x = pool[rng.uniform(0, pool.size() - 1)];
      const auto& y = pool[rng.uniform(0, pool.size() - 1)];
      const auto& z = pool[rng.uniform(0, pool.size() - 1)];
      if (!jacobi_holds(x, y, z)) ++jac_bad;
      if (!(bracket(x, y) + bracket(y, x)).is_zero() || !bracket(x, x).is_zero()) ++anti_bad;
      ++tested;
    }
  }
  r.push_back({"bracket is antisymmetric and satisfies Jacobi on random triples", "Lie algebra of vector fields",
               jac_bad == 0 && anti_bad == 0, std::to_string(tested) + " triples"});
  return r;
}

inline Report flows(const Options& o) {
  using Q = Rational;
  using P = MultiPoly<Q>;
  Report r;
  const std::string a_shift = "flow of d_tau is the shift Q -> Q + zeta";
  for (int n : n_range(o, 2, 5, "flows")) {
    r.push_back({"exp(zeta d_tau) z = vieta(q + eps zeta), formal zeta, eps = -1, " + ns(n), a_shift,
                 flow_shift_identity<Q>(n, -1), "verbatim d_tau shifts roots by -zeta"});
    r.push_back({"opposite direction vieta(q - eps zeta) does not hold, " + ns(n), "sign of d_tau against the shift action",
                 !flow_shift_identity<Q>(n, 1), "recorded discrepancy"});
  }
  const P zeta = P::variable("zeta");
  {
    auto tau = tau_field<Q>(2);
    P e1 = exp_flow(tau, zeta, P::variable("z1"), 6);
    P e2 = exp_flow(tau, zeta, P::variable("z2"), 6);
    bool ok = e1 == P::variable("z1") + P::constant(2) * zeta &&
              e2 == P::variable("z2") + zeta * P::variable("z1") + zeta * zeta;
    r.push_back({"n=2: exp(zeta d_tau): z1 -> z1 + 2 zeta, z2 -> z2 + zeta z1 + zeta^2", a_shift, ok,
                 e1.to_string() + "; " + e2.to_string()});
  }
  Rng rng(stream(o, 3));
  int group_bad = 0, hom_bad = 0, zero_bad = 0;
  for (int n : n_range(o, 2, 4, "flows")) {
    auto tau = standard_fields<Q>(n, -1).d_tau;
    const auto names = z_names<Q>(n);
    auto random_poly = [&]() {
      P p;
      for (int t = 0; t < 3; ++t) {
        P m = P::constant(rng.rational());
        for (const auto& v : names) m = m * P::variable(v).pow(static_cast<unsigned>(rng.uniform(0, 2)));
        p += m;
      }
      return p;
    };
    for (int i = 0; i < 5; ++i) {
      P f = random_poly(), g = random_poly();
      const int bound = 2 * n + 12;
      P fwd = exp_flow(tau, zeta, f, bound);
      std::map<std::string, P> back;
      for (const auto& v : names) back.emplace(v, exp_flow(tau, -zeta, P::variable(v), bound));
      if (!(fwd.substitute(back) == f)) ++group_bad;
      if (!(exp_flow(tau, zeta, f * g, 2 * bound) == fwd * exp_flow(tau, zeta, g, bound))) ++hom_bad;
      if (!(exp_flow(tau, P(), f, bound) == f)) ++zero_bad;
    }
  }
  r.push_back({"exp(l d) exp(-l d) = id, exp(0 d) = id, exp(l d) is multiplicative", "the correspondence t -> exp(t d)",
               group_bad == 0 && hom_bad == 0 && zero_bad == 0,
               std::to_string(group_bad + hom_bad + zero_bad) + " failures"});
  // Cross-module: the tau-action Q -> Q + zeta against the oriented flow.
  int cross_bad = 0;
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform(0, 3));
    auto q = random_any<Q>(rng, n);
    const Q z = rng.rational();
    Configuration<Q> moved = q;
    for (auto& p : moved.points) p = p + z;
    auto tau = standard_fields<Q>(n, -1).d_tau;
    auto zq = vieta_map(q).z;
    const auto names = z_names<Q>(n);
    for (int k = 0; k < n; ++k) {
      P flowed = exp_flow(tau, P::constant(z), P::variable(names[k]), 2 * n + 2);
      if (!(flowed.eval(names, zq) == vieta_map(moved).z[k])) {
        ++cross_bad;
        break;
      }
    }
  }
  r.push_back({"shift action Q -> Q + zeta equals the oriented d_tau flow on coefficients", "the case b = 1 is the tau-action",
               cross_bad == 0, "30 random exact cases"});
  auto dan = danielewski_demo(1);
  r.push_back({"Danielewski: d(x y - z^2 + 1) = 0", "the triangular automorphism of the Danielewski surface",
               dan.annihilates, ""});
  r.push_back({"Danielewski: exp(u d) = (x, y + 2zu + x u^2, z + x u, u) preserves the hypersurface",
               "preserves the hypersurface", dan.flow_formula && dan.preserves, ""});
  bool q1 = dan.alpha_at_q1 == std::vector<Rational>{0, 2, 1, 1};
  std::string v;
  for (const auto& x : dan.alpha_at_q1) v += (v.empty() ? "" : ",") + x.to_string();
  r.push_back({"Danielewski: alpha(0,0,1,1) = (0,2,1,1)", "sends Q1 to alpha(Q1) = (0,2,1,1)", q1, "(" + v + ")"});
  return r;
}

}  // namespace confalg::verify
