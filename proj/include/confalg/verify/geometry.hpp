#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "confalg/configspace/charts.hpp"
#include "confalg/configspace/mobius.hpp"
#include "confalg/configspace/roots.hpp"
#include "confalg/coxeter/automorphism.hpp"
#include "confalg/coxeter/verifiers.hpp"
#include "confalg/elliptic/quartic.hpp"
#include "confalg/random.hpp"
#include "confalg/verify/common.hpp"

namespace confalg::verify {

namespace detail {

inline Perm random_perm(Rng& rng, int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng.uniform(0, i)]);
  return Perm::from_images(img);
}

/// A point of reg Sigma^{n-2}_blc: {q_1..q_{n-2}, u, u} with u = -(1/2) sum q_i.
inline Configuration<Gaussian> random_reg_sigma(Rng& rng, int n) {
  for (;;) {
    auto q = random_distinct<Gaussian>(rng, n - 2);
    Gaussian sum(0);
    for (const auto& p : q.points) sum = sum + p;
    const Gaussian u = -(Gaussian(Rational(1, 2)) * sum);
    bool ok = true;
    for (const auto& p : q.points) ok = ok && !(p == u);
    if (!ok) continue;
    q.points.push_back(u);
    q.points.push_back(u);
    return q;
  }
}

/// Float point of discr f = 1: random base point on SC^1, random point on its fiber.
inline Quartic<Complex> random_float_surface_point(Rng& rng) {
  const Complex u2 = Complex(4.0 * rng.unit() - 2.0, 4.0 * rng.unit() - 2.0);
  const Complex u3 = std::sqrt(-(1.0 + 4.0 * u2 * u2 * u2) / 27.0);
  const Complex zz = Complex(4.0 * rng.unit() - 2.0, 4.0 * rng.unit() - 2.0);
  const Complex z3 = std::sqrt(zz * zz * zz + u2 * zz - u3);
  const Complex z2 = -1.5 * zz;
  return {z2, z3, -(u2 + z2 * z2 / 3.0) / 4.0};
}

/// Ordered distinct points avoiding 0 and 1.
inline Configuration<Gaussian> random_cstarstar(Rng& rng, int m) {
  for (;;) {
    auto q = random_distinct<Gaussian>(rng, m, true, true);
    bool ok = true;
    for (const auto& p : q.points) ok = ok && !(p == Gaussian(1));
    if (ok) return q;
  }
}

}  // namespace detail

inline Report sigma_charts(const Options& o) {
  using G = Gaussian;
  Report r;
  Rng rng(stream(o, 9));
  const std::string a_phi = "To construct such an isomorphism explicitly";
  {
    Configuration<G> q({G(2), G(-4), G(1), G(1)});
    Configuration<G> qp({G(1), G(-5)});
    bool ok = same_configuration(sigma_blc_phi(q), qp) && same_configuration(sigma_blc_psi(qp), q);
    r.push_back({"phi({2,-4,1,1}) = {1,-5}, psi({1,-5}) = {2,-4,1,1}", a_phi, ok, ""});
  }
  for (int n : n_range(o, 4, 6, "sigma-charts")) {
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      auto q = detail::random_reg_sigma(rng, n);
      if (!same_configuration(sigma_blc_psi(sigma_blc_phi(q)), q)) ++bad;
      auto qp = random_distinct<G>(rng, n - 2, false, true);
      if (!same_configuration(sigma_blc_phi(sigma_blc_psi(qp)), qp)) ++bad;
    }
    r.push_back({"psi o phi = id and phi o psi = id on 50 random exact inputs each, " + ns(n), a_phi, bad == 0,
                 std::to_string(bad) + " failures"});
  }
  {
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const int n = 2 + static_cast<int>(rng.uniform(0, 3));
      auto q = random_distinct<G>(rng, n, true, true);
      if (!same_configuration(eta_inv(eta(q)), q)) ++bad;
      auto e = eta(random_distinct<G>(rng, n, true, true));
      auto back = eta(eta_inv(e));
      if (!same_configuration(back.ratios, e.ratios) || !(back.y == e.y)) ++bad;
      const G c = random_nonzero<G>(rng);
      Configuration<G> cq = q;
      for (auto& p : cq.points) p = c * p;
      auto ec = eta(cq), e0 = eta(q);
      if (!same_configuration(ec.ratios, e0.ratios) || !(ec.y == c * e0.y)) ++bad;
    }
    auto ex = eta(Configuration<G>({G(2), G(4)}, true));
    bool ok = ex.ratios.points == std::vector<G>{G(Rational(1, 2))} && ex.y == G(4);
    r.push_back({"eta((2,4)) = ((1/2), 4); eta and eta^{-1} are inverse; eta(cQ) = (Q', c q_n), 50 random", "there is an isomorphism",
                 bad == 0 && ok, std::to_string(bad) + " failures"});
  }
  {
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const int n = 2 + static_cast<int>(rng.uniform(0, 3));
      auto q = random_distinct<G>(rng, n, true, true);
      auto img = phi_tilde(q);
      if (!same_configuration(phi_tilde_inv(img), q) || !barycenter(img).is_zero()) ++bad;
      auto p = barycenter_project(random_distinct<G>(rng, n + 1, true)).balanced;
      p.ordered = true;
      if (!same_configuration(phi_tilde(phi_tilde_inv(p)), p)) ++bad;
    }
    r.push_back({"phi~ and phi~^{-1} are inverse on 50 random exact inputs each; phi~ lands in the balanced slice",
                 "Consider the map", bad == 0, std::to_string(bad) + " failures"});
  }
  {
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      const int n = 2 + static_cast<int>(rng.uniform(0, 3));
      auto q = random_distinct<G>(rng, n, true, true);
      for (auto w : {Involution::Iota, Involution::TauInv, Involution::Upsilon, Involution::SigmaPrime, Involution::Rho})
        if (!same_configuration(involution(involution(q, w), w), q)) ++bad;
      auto up = involution(q, Involution::Upsilon);
      if (!same_configuration(up, involution(involution(q, Involution::Iota), Involution::TauInv)) ||
          !same_configuration(up, involution(involution(q, Involution::TauInv), Involution::Iota)))
        ++bad;
      if (!same_configuration(involution(involution(q, Involution::SigmaPrime), Involution::Upsilon),
                              involution(involution(q, Involution::Upsilon), Involution::SigmaPrime)))
        ++bad;
    }
    r.push_back({"iota, tau_inv, upsilon, sigma', rho are involutions; upsilon = tau_inv iota = iota tau_inv; upsilon sigma' = sigma' upsilon",
                 "we deal with the following involutions", bad == 0, "50 random exact inputs"});
  }
  // Moebius model.
  {
    bool ok = true;
    for (int n = 3; n <= 5; ++n) {
      auto q = detail::random_cstarstar(rng, n - 1);
      auto flip = mobius_action(Perm::transposition(n + 2, n, n + 1), q);
      for (int i = 0; i < n - 1; ++i) ok = ok && flip.points[i] == G(1) - q.points[i];
      ok = ok && same_configuration(mobius_action(Perm(n + 2), q), q);
    }
    r.push_back({"mobius: identity acts trivially; (n, n+1) acts by z -> 1 - z", "descends to an effective", ok, "exact"});
  }
  {
    double worst = 0.0;
    int count = 0;
    for (int n = 3; n <= 5; ++n)
      for (int i = 0; i < 50; ++i) {
        Configuration<Complex> q({}, true);
        while (q.n() < n - 1) {
          Complex z(4.0 * rng.unit() - 2.0, 4.0 * rng.unit() - 2.0);
          bool good = std::abs(z) > 0.1 && std::abs(z - 1.0) > 0.1;
          for (const auto& p : q.points) good = good && std::abs(p - z) > 0.1;
          if (good) q.points.push_back(z);
        }
        auto s = detail::random_perm(rng, n + 2), t = detail::random_perm(rng, n + 2);
        auto lhs = mobius_action(s * t, q), rhs = mobius_action(s, mobius_action(t, q));
        for (int k = 0; k < n - 1; ++k)
          worst = std::max(worst, std::abs(lhs.points[k] - rhs.points[k]) / std::max(1.0, std::abs(lhs.points[k])));
        ++count;
      }
    r.push_back({"mobius action axiom act(st) = act(s) act(t), 150 random float cases", "descends to an effective",
                 worst < o.tol, "max relative deviation " + sci(worst)});
  }
  {
    bool restrict_ok = true, ups = true, sig = true;
    for (int n = 3; n <= 5; ++n) {
      for (int i = 0; i < 10; ++i) {
        auto q = detail::random_cstarstar(rng, n - 1);
        std::vector<int> img(n + 2);
        auto sub = detail::random_perm(rng, n - 1);
        for (int k = 0; k < n + 2; ++k) img[k] = k < n - 1 ? sub(k) + 1 : k + 1;
        const Perm s = Perm::from_images(img);
        auto out = mobius_action(s, q);
        for (int k = 0; k < n - 1; ++k) restrict_ok = restrict_ok && out.points[s(k)] == q.points[k];
        // Lift Q' to Q in ordered C^n(C*) via eta^{-1} and compare the involutions.
        const G y = random_nonzero<G>(rng);
        auto big = eta_inv(EtaImage<G>{q, y});
        ups = ups && eta(involution(big, Involution::Upsilon)).ratios.points ==
                         mobius_action(Perm::transposition(n + 2, n, n + 2), q).points;
        sig = sig && eta(involution(big, Involution::SigmaPrime)).ratios.points ==
                         mobius_action(Perm::transposition(n + 2, n - 1, n + 1), q).points;
      }
    }
    r.push_back({"mobius restricted to S(n-1) permutes the coordinates of Q'", "the restriction to S(n-1) is identical",
                 restrict_ok, "n = 3, 4, 5"});
    r.push_back({"upsilon corresponds to (n, n+2): z -> 1/z on Q'", "commuting transpositions", ups, "n = 3, 4, 5, exact"});
    r.push_back({"sigma' corresponds to (n-1, n+1): r_i -> r_i / r_{n-1}, r_{n-1} -> 1/r_{n-1}", "commuting transpositions", sig,
                 "n = 3, 4, 5, exact"});
  }
  return r;
}

inline Report elliptic(const Options& o) {
  using Q = Rational;
  using E = Eisenstein;
  using P = MultiPoly<Q>;
  Report r;
  Rng rng(stream(o, 10));
  const P z2 = P::variable("z2"), z3 = P::variable("z3"), z4 = P::variable("z4");
  const Quartic<P> f{z2, z3, z4};
  {
    auto df = quartic_discriminant(f);
    auto dr = cubic_discriminant(cubic_resolvent(f));
    auto dg = cubic_discriminant(depressed_cubic(tschirnhausen(f)));
    r.push_back({"discr f = discr R3 = discr g in Q[z2, z3, z4]", "discr R3 = discr f", df == dr && dr == dg,
                 std::to_string(df.num_terms()) + " terms"});
  }
  {
    using G = Gaussian;
    const Quartic<Q> x4{0, 0, -1};
    auto res = cubic_resolvent(x4);
    bool coeffs = res == Cubic<Q>{0, 4, 0};
    bool disc = cubic_discriminant(res) == Q(-256) && quartic_discriminant(x4) == Q(-256);
    const std::vector<G> q{G(1), G(0, 1), G(-1), G(0, -1)};
    const std::vector<G> pairings{q[0] * q[1] + q[2] * q[3], q[0] * q[2] + q[1] * q[3], q[0] * q[3] + q[1] * q[2]};
    bool roots = true;
    for (const auto& l : pairings) roots = roots && (l * l * l + G(4) * l).is_zero();
    roots = roots && same_configuration(Configuration<G>(pairings), Configuration<G>({G(0), G(0, 2), G(0, -2)}));
    auto t = tschirnhausen(x4);
    r.push_back({"X^4 - 1: resolvent X^3 + 4X with roots {0, +-2i} = the pairings; both discriminants -256; base (4, 0)",
                 "we consider its cubic resolvent", coeffs && disc && roots && t == BasePoint<Q>{4, 0}, ""});
  }
  {
    const Quartic<E> x{E(0), E(Rational(0), Rational(1, 3)), E(Rational(1, 4))};
    auto b = fibration_project(x);
    bool ok = b == BasePoint<E>{E(-1), E(Rational(1, 3))} && -(E(4) * b.u2 * b.u2 * b.u2 + E(27) * b.u3 * b.u3) == E(1);
    bool reject = false;
    try {
      fibration_project(Quartic<Q>{0, 0, 0});
    } catch (const DomainError&) {
      reject = true;
    }
    r.push_back({"(0, d/3, 1/4) projects to (-1, 1/3) on SC^1; (0,0,0) is rejected", "yields an elliptic fibration on",
                 ok && reject, ""});
  }
  const std::string a_j = "with one place at infinity";
  {
    auto j0 = j_invariant(BasePoint<E>{E(0), E(Rational(0), Rational(1, 9))});
    bool on_base = -(E(27) * E(Rational(0), Rational(1, 9)) * E(Rational(0), Rational(1, 9))) == E(1);
    const Complex u2 = -std::cbrt(0.25);
    auto j1 = j_invariant(BasePoint<Complex>{u2, Complex(0)});
    const double rel = std::abs(j1.oracle - 1728.0) / 1728.0;
    r.push_back({"j = 0 at u2 = 0 (exact, on SC^1)", "then j(E(P))=0", j0.oracle.is_zero() && on_base, "exact"});
    r.push_back({"j = 1728 at u2^3 = -1/4, u3 = 0", "then j(E(P))=12^3=1728", rel < 1e-10,
                 "oracle " + num(j1.oracle.real()) + ", displayed formula gives " + num(j1.displayed.real()) +
                     ", relative error " + sci(rel)});
    auto j2 = j_invariant(BasePoint<E>{E(-1), E(Rational(1, 3))});
    r.push_back({"j(-1, 1/3) = 6912 by the oracle", a_j, j2.oracle == E(6912), j2.oracle.to_string()});
  }
  {
    auto pts = exact_surface_points(50);
    bool on_surface = true, on_base = true, sign = true;
    for (const auto& x : pts) {
      on_surface = on_surface && quartic_discriminant(x) == E(1);
      auto b = fibration_project(x);
      on_base = on_base && -(E(4) * b.u2 * b.u2 * b.u2 + E(27) * b.u3 * b.u3) == E(1);
      auto j = j_invariant(b);
      sign = sign && j.oracle == -(E(6912) * b.u2 * b.u2 * b.u2) && j.sign == -1;
    }
    r.push_back({"50 exact points of SC^2_blc project exactly onto SC^1_blc", "yields an elliptic fibration on",
                 on_surface && on_base, "points over Q(sqrt -3)"});
    r.push_back({"j oracle = -2^8 3^3 u2^3 at 50 exact base points", a_j, sign,
                 "sign -1: the displayed j(E(P)) = 2^8 3^3 u2^3 has the opposite sign of c4^3/Delta"});
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      auto x = detail::random_float_surface_point(rng);
      worst = std::max(worst, std::abs(quartic_discriminant(x) - 1.0));
      auto b = fibration_project(x, 1e-8);
      worst = std::max(worst, std::abs(-(4.0 * b.u2 * b.u2 * b.u2 + 27.0 * b.u3 * b.u3) - 1.0));
    }
    r.push_back({"20 float surface samples map into the base curve", "yields an elliptic fibration on", worst < 1e-10,
                 "max deviation " + sci(worst)});
  }
  {
    const P zeta = P::variable("zeta");
    auto lhs = tschirnhausen(mu12_action(zeta, f));
    auto rhs = mu12_action_base(zeta, tschirnhausen(f));
    bool weights = lhs == rhs && quartic_discriminant(mu12_action(zeta, f)) == zeta.pow(12) * quartic_discriminant(f);
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
      const Complex a = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform(0, 11) / 12.0);
      const Complex b = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform(0, 11) / 12.0);
      auto x = detail::random_float_surface_point(rng);
      auto u = mu12_action(a * b, x), v = mu12_action(a, mu12_action(b, x));
      worst = std::max({worst, std::abs(u.z2 - v.z2), std::abs(u.z3 - v.z3), std::abs(u.z4 - v.z4)});
    }
    bool fixed = true;
    for (const auto& x : exact_surface_points(12)) {
      fixed = fixed && tschirnhausen(mu12_action(E(-1), x)) == tschirnhausen(x) && mu12_action(E(1), x) == x;
    }
    r.push_back({"mu12: u2, u3 have weights 4, 6; action(zz') = action(z) action(z'); -1 fixes the base", "of the cyclic group",
                 weights && worst < 1e-12 && fixed, "group-law deviation " + sci(worst)});
  }
  return r;
}

inline Report counterexample(const Options& o) {
  using Q = Rational;
  using E = Eisenstein;
  using P = MultiPoly<Q>;
  using PE = MultiPoly<E>;
  Report r;
  Rng rng(stream(o, 11));
  const std::string a_c = "A simple computation shows that";
  const P p = P::variable("p"), q = P::variable("q");
  const P master = quartic_discriminant(Quartic<P>{p, q, P::constant(Q(-1, 12)) * p * p});
  const P sq = P::constant(8) * p.pow(3) + P::constant(27) * q * q;
  r.push_back({"discr(X^4 + pX^2 + qX - p^2/12) = -(1/27)(8p^3 + 27q^2)^2", a_c, master == P::constant(Q(-1, 27)) * sq * sq,
               std::to_string(master.num_terms()) + " terms"});
  const PE u2 = PE::variable("u2"), u3 = PE::variable("u3");
  const E A(Rational(0), Rational(3, 2)), B(Rational(0), Rational(3));
  const PE lhs = PE::constant(E(Rational(-1, 27))) *
                 (PE::constant(E(8) * A) * u2.pow(3) + PE::constant(E(27) * B) * u3 * u3).pow(2);
  const PE rhs = (PE::constant(E(4)) * u2.pow(3) + PE::constant(E(27)) * u3 * u3).pow(2);
  r.push_back({"A = (3/2)d, B = 3d: -(1/27)(8A u2^3 + 27B u3^2)^2 = (4u2^3 + 27u3^2)^2", a_c, lhs == rhs, "d^2 = -3"});

  // discr(F(f)) = (discr f)^2: master is a polynomial in p^3 and q^2; substitute
  // p^3 = A u2(z)^3 and q^2 = B u3(z)^2.
  {
    const PE z2 = PE::variable("z2"), z3 = PE::variable("z3"), z4 = PE::variable("z4");
    const Quartic<PE> f{z2, z3, z4};
    const auto u = tschirnhausen(f);
    const PE p3 = PE::constant(A) * u.u2.pow(3), q2 = PE::constant(B) * u.u3 * u.u3;
    bool in_cubes = true;
    PE image;
    const int ip = master.var_index("p"), iq = master.var_index("q");
    for (const auto& [e, c] : master.terms()) {
      const unsigned ep = e[ip], eq = e[iq];
      if (ep % 3 || eq % 2) in_cubes = false;
      image += PE::constant(E(c)) * p3.pow(ep / 3) * q2.pow(eq / 2);
    }
    const PE df = quartic_discriminant(f);
    r.push_back({"discr(F_{a,b}(f)) = (discr f)^2 symbolically in z2, z3, z4", a_c, in_cubes && image == df * df,
                 in_cubes ? "master discriminant depends on p^3 and q^2 only" : "master involves other powers"});
    // 12 z4 + z2^2 = 0 on the image, with a and b left symbolic.
    const PE a = PE::variable("a"), b = PE::variable("b");
    auto img = counterexample_endo(f, a, b);
    r.push_back({"the image satisfies 12 z4 + z2^2 = 0", "equivalent to 12z4+z2^2=0",
                 (PE::constant(E(12)) * img.z4 + img.z2 * img.z2).is_zero() && tschirnhausen(img).u2.is_zero(), "symbolic in a, b"});
  }
  {
    auto [a, b] = counterexample_constants();
    double worst = std::abs(a * a * a - Complex(0, 1.5 * std::sqrt(3.0))) + std::abs(b * b - Complex(0, 3.0 * std::sqrt(3.0)));
    for (int i = 0; i < 20; ++i) {
      auto x = detail::random_float_surface_point(rng);
      auto fx = counterexample_endo(x, a, b);
      worst = std::max(worst, std::abs(quartic_discriminant(fx) - 1.0));
    }
    r.push_back({"float: surface points map to discr(F(x)) = 1", a_c, worst < o.tol, "max deviation " + sci(worst)});
  }
  return r;
}

inline Report coxeter(const Options& o) {
  (void)o;
  Report r = coxeter_suite();
  {
    const std::vector<long> expect_classes{1, 2, 3, 5, 7, 11};
    bool ok = true;
    std::string det;
    for (int n = 1; n <= 7; ++n) {
      auto g = symmetric_group(n);
      ok = ok && static_cast<long>(g.order()) == factorial(n);
      if (n <= 6) {
        auto classes = g.conjugacy_classes();
        ok = ok && static_cast<long>(classes.size()) == expect_classes[n - 1];
        for (const auto& c : classes) ok = ok && g.order() % c.size() == 0;
      }
      det += (det.empty() ? "" : " ") + std::to_string(g.order());
    }
    r.push_back({"S(n) closure has order n! (n <= 7); class counts are partition numbers and class sizes divide |G|",
                 "finite permutation groups", ok, "orders " + det});
  }
  {
    auto wb3 = hyperoctahedral_group(3);
    auto d3 = automorphism_search(wb3);
    auto s4 = symmetric_group(4);
    auto d4 = automorphism_search(s4);
    auto c3 = FiniteGroup<Perm>(Perm(3), {Perm::from_cycles(3, {{1, 2, 3}})});
    auto dc = automorphism_search(c3);
    bool ok = d3.inner_count == wb3.order() / wb3.center().size() && d4.inner_count == 24 && d4.aut_order() == 24 &&
              c3.order() == 3 && dc.aut_order() == 2;
    r.push_back({"|Inn G| = |G|/|Z(G)| for WB3, S(4); Aut(S(4)) = Inn; |Aut(Z/3)| = 2", "inner automorphisms", ok,
                 "WB3: |Z| = " + std::to_string(wb3.center().size()) + ", Inn " + std::to_string(d3.inner_count) +
                     ", Aut " + std::to_string(d3.aut_order())});
  }
  return r;
}

}  // namespace confalg::verify
