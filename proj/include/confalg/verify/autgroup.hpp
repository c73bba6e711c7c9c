#pragma once

#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "confalg/autgroup/covering.hpp"
#include "confalg/autgroup/triangular.hpp"
#include "confalg/autgroup/zinde.hpp"
#include "confalg/configspace/charts.hpp"
#include "confalg/exactalg/resultant.hpp"
#include "confalg/random.hpp"
#include "confalg/verify/common.hpp"

namespace confalg::verify {

namespace detail {

template <Field F>
F small_nonzero(Rng& rng) {
  if constexpr (is_exact_v<F>) {
    return F(rng.nonzero_rational(3, 2));
  } else {
    return std::polar(0.5 + rng.unit(), 2.0 * std::numbers::pi * rng.unit());
  }
}

/// Random b for a space: a few w-monomials and S-terms of small weight.
template <Field F>
BalancedFunction<F> random_b(Rng& rng, AutSpace space, int n) {
  BalancedFunction<F> b(n);
  const int terms = static_cast<int>(rng.uniform(0, 3));
  for (int i = 0; i < terms; ++i) {
    int m = 0;
    if (space == AutSpace::Cn) m = static_cast<int>(rng.uniform(-1, 1));
    if (space == AutSpace::Pair) m = static_cast<int>(rng.uniform(0, 1));
    const F c = random_nonzero<F>(rng);
    if (rng.uniform(0, 3) == 0) {
      b = b + BalancedFunction<F>::s_term(n, c, 2 * static_cast<int>(rng.uniform(1, 2)), m);
    } else {
      std::vector<unsigned> e(n - 1, 0);
      e[rng.uniform(0, n - 2)] = static_cast<unsigned>(rng.uniform(0, 2));
      b = b + BalancedFunction<F>::w_monomial(n, c, e, m);
    }
  }
  return b;
}

/// The SC-compatible scalings available in the field.
template <Field F>
std::vector<F> sc_scalings(int n) {
  std::vector<F> out;
  if constexpr (std::is_same_v<F, Gaussian>) {
    out = {F(1), F(-1), F(0, 1), F(0, -1)};
  } else if constexpr (std::is_same_v<F, Eisenstein>) {
    const F z6(Rational(1, 2), Rational(1, 2));
    F p = F(1);
    for (int i = 0; i < 6; ++i, p = p * z6) out.push_back(p);
  } else {
    out = {F(1), F(-1)};
  }
  std::vector<F> ok;
  for (const auto& s : out)
    if (power(s, n * (n - 1)) == from_int<F>(1)) ok.push_back(s);
  return ok;
}

template <Field F>
TriangularAut<F> random_aut(Rng& rng, AutSpace space, int n) {
  F s;
  if (space == AutSpace::SC) {
    auto pool = sc_scalings<F>(n);
    s = pool[rng.uniform(0, pool.size() - 1)];
  } else {
    s = small_nonzero<F>(rng);
  }
  const F t = small_nonzero<F>(rng);
  const int k = space == AutSpace::Cn ? static_cast<int>(rng.uniform(-1, 1)) : 0;
  return make_aut(space, n, s, t, k, random_b<F>(rng, space, n));
}

/// Independent pointwise inverse: x° = s y°, bc(x) = a(y°) bc(y) + b(y°).
template <Field F>
Configuration<F> pointwise_inverse(const TriangularAut<F>& f, const Configuration<F>& x) {
  auto [bcx, x0] = barycenter_project(x);
  Configuration<F> y0 = x0;
  for (auto& p : y0.points) p = p / f.s;
  const F bcy = (bcx - f.b.eval(y0)) / f.a_value(y0);
  for (auto& p : y0.points) p = p + bcy;
  return y0;
}

/// Exact SC^2 points over Q(sqrt -3): images of {0, 1, zeta6} under SC automorphisms.
inline Configuration<Eisenstein> random_sc3_point(Rng& rng) {
  using E = Eisenstein;
  Configuration<E> base({E(0), E(1), E(Rational(1, 2), Rational(1, 2))});
  auto f = random_aut<E>(rng, AutSpace::SC, 3);
  return evaluate_aut(f, base);
}

}  // namespace detail

/// Group-law battery for one space and n over field F with a point sampler.
template <Field F>
void group_law_block(Report& r, Rng& rng, AutSpace space, int n, int samples,
                     const std::function<Configuration<F>(Rng&)>& sample, double tol, const std::string& note) {
  int comp = 0, inv = 0, comm = 0, comm_base = 0, dscale = 0, assoc = 0, space_bad = 0;
  const int nn = n * (n - 1);
  for (int i = 0; i < samples; ++i) {
    auto f = detail::random_aut<F>(rng, space, n);
    auto g = detail::random_aut<F>(rng, space, n);
    auto q = sample(rng);
    auto fq = evaluate_aut(f, q, tol);
    if (!same_configuration(evaluate_aut(compose(g, f), q, tol), evaluate_aut(g, fq, tol), tol)) ++comp;
    if (!same_configuration(evaluate_aut(invert(f), q, tol), detail::pointwise_inverse(f, q), tol) ||
        !same_configuration(evaluate_aut(invert(f), fq, tol), q, tol))
      ++inv;
    // [g, f] = g^-1 f^-1 g f, pointwise through the independent inverse.
    auto chain = detail::pointwise_inverse(g, detail::pointwise_inverse(f, evaluate_aut(g, fq, tol)));
    auto c = commutator(g, f);
    if (!same_configuration(evaluate_aut(c, q, tol), chain, tol)) ++comm;
    if (!near(c.s, from_int<F>(1), tol)) ++comm_base;
    if (!near(disc_config(fq), power(f.s, nn) * disc_config(q), tol)) ++dscale;
    if (space != AutSpace::SC && !in_aut_space(f, fq, tol) && in_aut_space(f, q, tol)) ++space_bad;
    if (i % 4 == 0) {
      auto h = detail::random_aut<F>(rng, space, n);
      if (!same_aut(compose(h, compose(g, f)), compose(compose(h, g), f), tol)) ++assoc;
    }
  }
  const std::string tag = std::string(aut_space_name(space)) + ", " + ns(n) + note;
  const std::string a_law = "composition of triangular automorphisms";
  r.push_back({"compose(G, F) = G o F pointwise, " + tag, a_law, comp == 0, std::to_string(samples) + " samples, " + std::to_string(comp) + " failures"});
  r.push_back({"invert(F) agrees with the pointwise inverse, " + tag, a_law, inv == 0, std::to_string(inv) + " failures"});
  r.push_back({"commutator formula agrees with pointwise evaluation and has s = 1, " + tag,
               "the commutator of two triangular automorphisms", comm == 0 && comm_base == 0,
               std::to_string(comm) + " value failures, " + std::to_string(comm_base) + " with s != 1"});
  r.push_back({"D_n(F(Q)) = s^{n(n-1)} D_n(Q) and F preserves the space, associativity, " + tag,
               "the automorphism preserves the level structure", dscale == 0 && space_bad == 0 && assoc == 0,
               std::to_string(dscale + space_bad + assoc) + " failures"});
}

inline Report aut_group_laws(const Options& o) {
  using G = Gaussian;
  using E = Eisenstein;
  Report r;
  Rng rng(stream(o, 4));
  const auto ns_list = n_range(o, 3, 5, "aut-group-laws");
  for (int n : ns_list) {
    group_law_block<G>(r, rng, AutSpace::Cn, n, 100, [n](Rng& g) { return random_distinct<Gaussian>(g, n); }, o.tol, "");
    group_law_block<G>(r, rng, AutSpace::Sigma, n, 100, [n](Rng& g) { return random_with_repeat<Gaussian>(g, n); }, o.tol, "");
    group_law_block<G>(r, rng, AutSpace::Pair, n, 100, [n](Rng& g) { return random_any<Gaussian>(g, n); }, o.tol, "");
    if (n == 3)
      group_law_block<E>(r, rng, AutSpace::SC, 3, 100, detail::random_sc3_point, o.tol, " (exact points with D = 1 over Q(sqrt -3))");
    else
      group_law_block<G>(r, rng, AutSpace::SC, n, 100, [n](Rng& g) { return random_distinct<Gaussian>(g, n); }, o.tol,
                         " (SC parameters, s in mu_4, ambient Gaussian points)");
  }
  {
    bool sc_ok = true;
    for (int i = 0; i < 20; ++i) sc_ok = sc_ok && disc_config(detail::random_sc3_point(rng)) == E(1);
    r.push_back({"SC sample points have D = 1 exactly", "special configuration space", sc_ok, "20 points"});
  }

  // Constructor contract.
  {
    using Q = Rational;
    const Configuration<Q> q012({0, 1, 2});
    auto homothety = make_aut<Q>(AutSpace::Cn, 3, 2, 2, 0, BalancedFunction<Q>(3));
    bool h = same_configuration(apply_aut(homothety, q012), Configuration<Q>({0, 2, 4}));
    auto f = make_aut<Q>(AutSpace::Cn, 3, 2, 1, 0, BalancedFunction<Q>(3));
    bool ex = same_configuration(apply_aut(f, q012), Configuration<Q>({-1, 1, 3}));
    bool id = same_configuration(apply_aut(identity_aut<Q>(AutSpace::Cn, 3), q012), q012);
    auto six = make_aut<Q>(AutSpace::Cn, 3, 2, 2, 0, BalancedFunction<Q>(3));
    auto three = make_aut<Q>(AutSpace::Cn, 3, 3, 3, 0, BalancedFunction<Q>(3));
    bool law = same_aut(compose(three, six), make_aut<Q>(AutSpace::Cn, 3, 6, 6, 0, BalancedFunction<Q>(3)));
    bool sc_accept = true, sc_reject = false, sigma_reject = false;
    std::string msg;
    try {
      make_aut<E>(AutSpace::SC, 3, E(Rational(1, 2), Rational(1, 2)), E(1), 0, BalancedFunction<E>(3));
    } catch (const DomainError&) {
      sc_accept = false;
    }
    try {
      make_aut<Q>(AutSpace::SC, 3, 2, 1, 0, BalancedFunction<Q>(3));
    } catch (const DomainError& e) {
      sc_reject = true;
      msg = e.what();
    }
    try {
      make_aut<Q>(AutSpace::Sigma, 3, 1, 1, 1, BalancedFunction<Q>(3));
    } catch (const DomainError&) {
      sigma_reject = true;
    }
    r.push_back({"make_aut examples: homothety, {0,1,2} -> {-1,1,3}, identity, 3 o 2 = 6",
                 "is an automorphism if and only if", h && ex && id && law, ""});
    r.push_back({"make_aut constraints: SC accepts s^6 = 1, rejects s = 2; Sigma rejects k = 1",
                 "s^{n(n-1)}=1", sc_accept && sc_reject && sigma_reject && msg.find("s^{n(n-1)}=1") != std::string::npos,
                 msg});
  }

  // Commutator witnesses.
  {
    Rng crng(stream(o, 5));
    auto check = [&](const Complex& t, int n, int configs) {
      auto w = commutator_witness(t, n);
      double worst = std::abs(w.comm.s - 1.0);
      for (int i = 0; i < configs; ++i) {
        auto q = random_distinct<Complex>(crng, n);
        auto [bc, q0] = barycenter_project(q);
        Configuration<Complex> expect = q0;
        for (auto& p : expect.points) p += t * bc;
        worst = std::max(worst, matching_distance(evaluate_aut(w.comm, q), expect));
      }
      return worst;
    };
    const double e1 = check(Complex(-1), 3, 20);
    auto w3 = commutator_witness(Complex(-1), 3);
    const bool root = std::abs(w3.f.s - std::polar(1.0, std::numbers::pi / 6)) < 1e-12;
    r.push_back({"commutator witness t = -1, n = 3: s = e^{i pi/6}, [F', F] acts as Q -> Q° - bc",
                 "a product of two commutators", root && e1 < o.tol, "max deviation " + sci(e1)});
    const Complex tu = random_unit(crng);
    const double e2 = check(tu, 4, 20);
    r.push_back({"commutator witness, random unit t, n = 4, 20 configurations", "a product of two commutators",
                 e2 < o.tol, "max deviation " + sci(e2)});
    auto w1 = commutator_witness(Complex(1), 3);
    r.push_back({"commutator witness t = 1 is the identity", "a product of two commutators", is_identity(w1.comm, o.tol), ""});
  }
  {
    bool all = true;
    for (AutSpace sp : {AutSpace::Cn, AutSpace::Sigma, AutSpace::Pair, AutSpace::SC})
      for (int n : ns_list) {
        auto b = detail::random_b<G>(rng, sp, n);
        auto c = shift_commutator_witness(sp, b);
        all = all && same_aut(c, make_aut<G>(sp, n, G(1), G(1), 0, b));
        auto q = sp == AutSpace::Sigma ? random_with_repeat<G>(rng, n) : random_distinct<G>(rng, n);
        auto shifted = shift_action(G(1), b, q);
        all = all && same_configuration(evaluate_aut(c, q), shifted);
      }
    r.push_back({"[A', A''] with A': y -> -y - b/2, A'': y -> y + b/2 is the shift y -> y + b, every space",
                 "can be written as commutator", all, "exact"});
  }

  // Tame representation.
  {
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const int n = 3 + static_cast<int>(rng.uniform(0, 2));
      auto f = detail::random_aut<G>(rng, AutSpace::Cn, n);
      auto q = random_distinct<G>(rng, n);
      auto tm = tame_affine_map(f, q);
      Configuration<G> img = q;
      for (auto& p : img.points) p = tm(p);
      if (!same_configuration(img, apply_aut(f, q))) ++bad;
    }
    using Q = Rational;
    auto f = make_aut<Q>(AutSpace::Cn, 3, 2, 1, 0, BalancedFunction<Q>(3));
    auto tm = tame_affine_map(f, Configuration<Q>({0, 1, 2}));
    bool ex = tm.a == Q(2) && tm.b == Q(-1);
    auto ti = tame_affine_map(identity_aut<Q>(AutSpace::Cn, 3), Configuration<Q>({0, 1, 5}));
    ex = ex && ti.a == Q(1) && ti.b == Q(0);
    r.push_back({"T(Q) Q = F(Q) on 100 random cases; T for s=2 on {0,1,2} is z -> 2(z-1)+1; identity gives T = id",
                 "with the morphism", bad == 0 && ex, std::to_string(bad) + " failures"});
  }

  // Relative automorphisms of (C^n, Sigma).
  for (int n : {3, 4}) {
    using Q = Rational;
    using P = MultiPoly<Q>;
    std::vector<unsigned> e(n - 1, 0);
    e[0] = 1;
    const Q s(2), t(5);
    auto f = relative_aut<Q>(n, s, t, BalancedFunction<Q>::w_monomial(n, Q(1), e) +
                                          BalancedFunction<Q>::w_monomial(n, Q(-3), std::vector<unsigned>(n - 1, 0)));
    auto pm = polynomial_map(f);
    auto d = universal_discriminant<Q>(n);
    std::map<std::string, P> sub;
    for (int i = 0; i < n; ++i) sub.emplace("z" + std::to_string(i + 1), pm[i]);
    bool ok = d.substitute(sub) == P::constant(power(s, n * (n - 1))) * d;
    // Cross-check the polynomial map against pointwise evaluation.
    auto q = random_any<Q>(rng, n);
    auto z = vieta_map(q).z;
    std::vector<Q> zi;
    for (const auto& p : pm) zi.push_back(p.eval(P::names("z", 1, n), z));
    ok = ok && zi == vieta_map(evaluate_aut(f, q)).z;
    r.push_back({"relative automorphism: d_n(F(z)) = s^{n(n-1)} d_n(z) symbolically, " + ns(n), "where the 2-torus", ok,
                 "s = 2, t = 5, b = w2 - 3"});
  }
  try {
    relative_aut<Rational>(3, 1, 1, BalancedFunction<Rational>::w_monomial(3, 1, {1, 0}, 1));
    r.push_back({"relative automorphism rejects b with D-powers", "where the 2-torus", false, "accepted"});
  } catch (const DomainError&) {
    r.push_back({"relative automorphism rejects b with D-powers", "where the 2-torus", true, ""});
  }

  // Canonical torus and shift actions.
  {
    bool ok = true;
    for (int i = 0; i < 30; ++i) {
      const int n = 3 + static_cast<int>(rng.uniform(0, 2));
      auto q = random_any<G>(rng, n);
      ok = ok && same_configuration(nu_torus(G(1), G(1), q), q);
      const G s = detail::small_nonzero<G>(rng), t = detail::small_nonzero<G>(rng);
      ok = ok && same_configuration(nu_torus(s, t, q), evaluate_aut(make_aut(AutSpace::Pair, n, s, t, 0, BalancedFunction<G>(n)), q));
      auto rep = random_with_repeat<G>(rng, n);
      ok = ok && disc_config(nu_torus(s, t, rep)).is_zero();
      auto qd = random_distinct<G>(rng, n);
      ok = ok && !disc_config(nu_torus(s, t, qd)).is_zero();
    }
    r.push_back({"nu(1,1) = id; nu(s,t) = (s, t, 0, 0); nu preserves C^n and Sigma", "consisting of all transformations", ok,
                 "30 samples"});
  }
  return r;
}

inline Report torsion(const Options& o) {
  using G = Gaussian;
  using E = Eisenstein;
  Report r;
  Rng rng(stream(o, 6));
  const auto ns_list = n_range(o, 3, 5, "torsion");
  const std::string a_pow = "proceeds by induction on m";
  const std::string a_ex = "Automorphisms of C^n of finite order";
  {
    int bad = 0, total = 0;
    const std::vector<G> units{G(1), G(-1), G(0, 1), G(0, -1)};
    for (int n : ns_list)
      for (const auto& s : units)
        for (const auto& t : units) {
          auto f = make_aut(AutSpace::Cn, n, s, t, 0, detail::random_b<G>(rng, AutSpace::Cn, n));
          for (int m = 0; m <= 5; ++m, ++total)
            if (!same_aut(closed_form_power(f, m), power(f, m))) ++bad;
        }
    r.push_back({"F^m closed form = iterated composition, s, t in {+-1, +-i}, m <= 5 (exact)", a_pow, bad == 0,
                 std::to_string(total) + " cases, " + std::to_string(bad) + " failures"});
  }
  {
    int bad = 0, total = 0;
    for (int n : ns_list)
      for (int i = 0; i < 10; ++i) {
        auto f = make_aut(AutSpace::Cn, n, detail::small_nonzero<Complex>(rng), detail::small_nonzero<Complex>(rng), 0,
                          detail::random_b<Complex>(rng, AutSpace::Cn, n));
        for (int m = 0; m <= 6; ++m, ++total) {
          auto q = random_distinct<Complex>(rng, n);
          if (!same_configuration(evaluate_aut(closed_form_power(f, m), q), evaluate_aut(power(f, m), q), o.tol)) ++bad;
        }
      }
    r.push_back({"F^m closed form = iteration for random complex s, t (tol)", a_pow, bad == 0,
                 std::to_string(total) + " cases, " + std::to_string(bad) + " failures"});
  }

  auto order_str = [](std::optional<int> m) { return m ? "order " + std::to_string(*m) : std::string("no order <= 24"); };
  {
    bool ok = true;
    std::string det;
    for (int n : ns_list) {
      auto f = make_aut(AutSpace::Cn, n, G(1), G(-1), 0, detail::random_b<G>(rng, AutSpace::Cn, n) +
                                                           BalancedFunction<G>::w_monomial(n, G(1), std::vector<unsigned>(n - 1, 0)));
      auto m = aut_order(f);
      ok = ok && m == 2;
      det = order_str(m);
    }
    r.push_back({"example (a): s = 1, t = -1, any b has order 2", a_ex, ok, det});
  }
  {
    // (b): s, t distinct m-th roots of unity, t != 1, b = S_{k n(n-1)} D^{-k}.
    auto s_inv = [](int n, auto c) {
      using F = decltype(c);
      return BalancedFunction<F>::s_term(n, c, n * (n - 1), -1);
    };
    auto f1 = make_aut(AutSpace::Cn, 3, G(0, 1), G(-1), 0, s_inv(3, G(1)));
    const E z6(Rational(1, 2), Rational(1, 2));
    auto f2 = make_aut(AutSpace::Cn, 3, z6, z6 * z6, 0, s_inv(3, E(2)));
    auto f3 = make_aut(AutSpace::Cn, 4, G(0, 1), G(-1), 0, s_inv(4, G(1)));
    auto m1 = aut_order(f1), m2 = aut_order(f2), m3 = aut_order(f3);
    bool ok = m1 && 4 % *m1 == 0 && *m1 > 1 && m2 && 6 % *m2 == 0 && *m2 > 1 && m3 && 4 % *m3 == 0 && *m3 > 1;
    r.push_back({"example (b): s, t distinct m-th roots of unity, b = S_{n(n-1)} D^{-1}: order divides m", a_ex, ok,
                 "n=3 (i, -1): " + order_str(m1) + "; n=3 (z6, z3): " + order_str(m2) + "; n=4 (i, -1): " + order_str(m3)});
  }
  {
    bool ok = true;
    for (int n : ns_list) {
      auto f = make_aut(AutSpace::Cn, n, G(-1), G(-1), 0, BalancedFunction<G>::s_term(n, G(1), 2));
      ok = ok && aut_order(f) == 2;
      auto q = random_distinct<G>(rng, n);
      Configuration<G> expect = q;
      const G s2 = BalancedFunction<G>::s_term(n, G(1), 2).eval(barycenter_project(q).balanced);
      for (auto& p : expect.points) p = -p + s2;
      ok = ok && same_configuration(apply_aut(f, q), expect);
    }
    r.push_back({"example (c): Q -> -Q + S_2(Q°) is an involution", "is an involution. For instance", ok, ""});
  }
  {
    const E z6(Rational(1, 2), Rational(1, 2));
    auto f6 = semisimple_build(AutSpace::Cn, 3, z6, z6, BalancedFunction<E>(3));
    bool ok6 = aut_order(f6) == 6;
    bool id_ok = true;
    for (int n : ns_list) id_ok = id_ok && is_identity(semisimple_build(AutSpace::Cn, n, G(1), G(1), detail::random_b<G>(rng, AutSpace::Cn, n)));
    auto ff = semisimple_build(AutSpace::Cn, 3, Complex(1), Complex(-1), BalancedFunction<Complex>::w_monomial(3, Complex(1), {1, 0}));
    bool inv_ok = true;
    for (int i = 0; i < 10; ++i) {
      auto q = random_distinct<Complex>(rng, 3);
      inv_ok = inv_ok && same_configuration(evaluate_aut(power(ff, 2), q), q, o.tol);
    }
    // finite order iff s^m = t^m = 1
    bool iff = true;
    for (int n : ns_list) {
      iff = iff && aut_order(semisimple_build(AutSpace::Cn, n, G(0, 1), G(1), detail::random_b<G>(rng, AutSpace::Cn, n))) == 4;
      iff = iff && aut_order(semisimple_build(AutSpace::Cn, n, G(-1), G(0, -1), detail::random_b<G>(rng, AutSpace::Cn, n))) == 4;
      iff = iff && !aut_order(semisimple_build(AutSpace::Cn, n, G(2), G(1), detail::random_b<G>(rng, AutSpace::Cn, n)));
      iff = iff && !aut_order(make_aut(AutSpace::Cn, n, G(1), G(2), 0, BalancedFunction<G>(n)));
    }
    r.push_back({"semisimple: s = t = z6 has order 6; s = t = 1 is the identity; s = 1, t = -1, b = w2 squares to id",
                 "semisimple if and only if", ok6 && id_ok && inv_ok, ""});
    r.push_back({"semisimple: finite order exactly when s^m = t^m = 1 (orders 4, 4; none for s = 2 or t = 2)",
                 "are precisely the automorphisms", iff, ""});
  }
  {
    // Inversion: for b of a finite order F, t b~ - b~(s .) = b.
    bool ok = true, verbatim_differs = true;
    int cases = 0;
    auto test = [&](const auto& f, int m) {
      auto bt = inversion_btilde(f.b, f.s, f.t, m);
      ok = ok && same_function(f.t * bt - bt.scale_arg(f.s), f.b);
      auto bv = inversion_btilde_verbatim(f.b, f.s, f.t, m);
      auto lhs = f.t * bv - bv.scale_arg(f.s);
      verbatim_differs = verbatim_differs && same_function(lhs, f.t * f.b.scale_arg(from_int<std::decay_t<decltype(f.s)>>(1) / f.s));
      verbatim_differs = verbatim_differs && !same_function(lhs, f.b);
      ++cases;
    };
    for (int n : ns_list) {
      test(semisimple_build(AutSpace::Cn, n, G(0, 1), G(-1), detail::random_b<G>(rng, AutSpace::Cn, n) +
                                                                 BalancedFunction<G>::w_monomial(n, G(1), std::vector<unsigned>(n - 1, 0))), 4);
      test(semisimple_build(AutSpace::Cn, n, G(-1), G(0, 1), BalancedFunction<G>::s_term(n, G(3), 2) +
                                                                 BalancedFunction<G>::w_monomial(n, G(1), std::vector<unsigned>(n - 1, 0))), 4);
    }
    test(make_aut(AutSpace::Cn, 3, G(0, 1), G(-1), 0, BalancedFunction<G>::s_term(3, G(1), 6, -1)), 4);
    r.push_back({"inversion formula: b~ = sum_{j<m} (m-j)/m t^{m-j-1} b(s^j .) gives t b~ - b~(s .) = b", "The inversion formula",
                 ok, std::to_string(cases) + " finite-order automorphisms (exact)"});
    r.push_back({"the index-shifted form sum (m-j)/m t^{m-j} b(s^{j-1} .) yields t b(s^{-1} .) instead of b",
                 "The inversion formula", verbatim_differs, "recorded discrepancy"});
  }
  return r;
}

inline Report zinde(const Options& o) {
  using G = Gaussian;
  using Q = Rational;
  Report r;
  Rng rng(stream(o, 7));
  const std::string a_z = "is an automorphism if and only if there exist";
  {
    bool ex = h_n(Configuration<Q>({1, 2})) == Q(1, 2);
    bool inv = true;
    for (int i = 0; i < 40; ++i) {
      const int n = 2 + static_cast<int>(rng.uniform(0, 4));
      auto q = random_distinct<G>(rng, n, false, true);
      const G c = random_nonzero<G>(rng);
      Configuration<G> cq = q, qi = q;
      for (auto& p : cq.points) p = c * p;
      for (auto& p : qi.points) p = G(1) / p;
      inv = inv && h_n(cq) == h_n(q) && h_n(qi) == h_n(q);
    }
    r.push_back({"h_n({1,2}) = 1/2; h_n(cQ) = h_n(Q^{-1}) = h_n(Q) on 40 random exact Q", "Consider the function", ex && inv, ""});
  }
  for (int n : n_range(o, 3, 5, "zinde")) {
    int bad = 0, inv_bad = 0;
    for (int i = 0; i < 100; ++i) {
      auto f = make_zinde(random_nonzero<G>(rng), static_cast<int>(rng.uniform(-2, 2)), rng.uniform(0, 1) ? 1 : -1);
      auto g = make_zinde(random_nonzero<G>(rng), static_cast<int>(rng.uniform(-2, 2)), rng.uniform(0, 1) ? 1 : -1);
      auto q = random_distinct<G>(rng, n, false, true);
      if (!same_configuration(apply_zinde(compose_zinde(f, g), q), apply_zinde(f, apply_zinde(g, q)))) ++bad;
      if (!same_configuration(apply_zinde(invert_zinde(f), apply_zinde(f, q)), q)) ++inv_bad;
    }
    r.push_back({"(s,k,e) o (s',k',e') = (s s'^e, k + e k', e e') and the inverse agree with pointwise evaluation, " + ns(n),
                 a_z, bad == 0 && inv_bad == 0, "100 exact samples"});
  }
  {
    auto f = make_zinde(G(1), 1, -1);
    bool sq = compose_zinde(f, f) == make_zinde(G(1), 0, 1);
    auto q = random_distinct<G>(rng, 4, false, true);
    sq = sq && same_configuration(apply_zinde(f, apply_zinde(f, q)), q) &&
         same_configuration(apply_zinde(make_zinde(G(1), 0, 1), q), q);
    r.push_back({"(1,1,-1) o (1,1,-1) = (1,0,+1) = id", a_z, sq, ""});
    auto a = make_zinde(G(1), 2, 1), b = make_zinde(G(1), 0, -1);
    auto ab = compose_zinde(a, b), ba = compose_zinde(b, a);
    bool noncomm = !(ab == ba) && !same_configuration(apply_zinde(ab, q), apply_zinde(ba, q));
    r.push_back({"the Z and Z/2 factors do not commute: (1,2,1) o (1,0,-1) = (1,2,-1), reverse order (1,-2,-1)",
                 "where the factors Z and Z/2Z commute", noncomm,
                 "k -> -k under e = -1; recorded discrepancy with the direct-product presentation"});
  }
  {
    using P = MultiPoly<Q>;
    const P z1 = P::variable("z1"), z2 = P::variable("z2");
    auto [u1, u2] = involution_U(z1, z2);
    auto [v1, v2] = involution_U(u1, u2);
    bool invol = v1 == z1 && v2 == z2;
    auto fixed = involution_U(Q(4), Q(2));
    bool fix = fixed.first == Q(4) && fixed.second == Q(2);
    auto [a1, a2] = involution_U(z1, P());
    auto [b1, b2] = involution_U(z1, P::constant(Q(1, 4)) * z1 * z1);
    bool swap = (a1 * a1 - P::constant(4) * a2).is_zero() && b2.is_zero();
    r.push_back({"U is an involution fixing (4,2) and swapping z2 = 0 with z1^2 - 4 z2 = 0", "Consider the involution",
                 invol && fix && swap, "symbolic in (z1, z2)"});
  }
  return r;
}

inline Report covering(const Options& o) {
  Report r;
  Rng rng(stream(o, 8));
  const std::string a_cov = "finite unramified cyclic holomorphic covering";
  {
    auto cov = covering_preimages(Complex(1), 1, Configuration<Complex>({Complex(-1), Complex(0), Complex(1)}), o.tol);
    const Complex w0 = std::pow(4.0, -1.0 / 7.0);
    bool ok = cov.degree == 7 && cov.preimages.size() == 7 && std::abs(cov.omegas[0] - w0) < 1e-12 && cov.max_residual < 1e-8;
    r.push_back({"n=3, m=1, c=1, {-1,0,1}: 7 preimages with omega_0 = 4^{-1/7}", a_cov, ok, "residual " + sci(cov.max_residual)});
  }
  for (int n : n_range(o, 3, 5, "covering")) {
    const int expect = n * (n - 1) + 1;
    double worst = 0.0;
    bool count = true;
    for (int i = 0; i < 5; ++i) {
      auto q0 = barycenter_project(random_distinct<Complex>(rng, n)).balanced;
      const Complex c = random_unit(rng) * (0.5 + rng.unit());
      auto cov = covering_preimages(c, 1, q0, o.tol);
      count = count && cov.degree == expect && static_cast<int>(cov.preimages.size()) == expect;
      worst = std::max(worst, cov.max_residual);
    }
    r.push_back({"(n, m) = (" + std::to_string(n) + ", 1): exactly N = " + std::to_string(expect) + " preimages, residual < 1e-8",
                 a_cov, count && worst < 1e-8, "max residual " + sci(worst)});
  }
  {
    auto q0 = barycenter_project(random_distinct<Complex>(rng, 4)).balanced;
    auto cov = covering_preimages(Complex(1), 0, q0, o.tol);
    bool ok = cov.degree == 1 && cov.preimages.size() == 1 && matching_distance(cov.preimages[0], q0) < 1e-12;
    r.push_back({"m = 0, c = 1: the single preimage is Q° itself", a_cov, ok, ""});
  }
  return r;
}

}  // namespace confalg::verify
