#include <gtest/gtest.h>

#include "confalg/configspace/charts.hpp"
#include "confalg/configspace/mobius.hpp"
#include "confalg/configspace/roots.hpp"
#include "confalg/configspace/vieta.hpp"
#include "confalg/random.hpp"

using namespace confalg;
using Q = Rational;
using G = Gaussian;
using C = Configuration<Q>;

TEST(Vieta, Examples) {
  EXPECT_EQ(vieta_map(C({1, 2, 3})).z, (std::vector<Q>{-6, 11, -6}));
  EXPECT_EQ(vieta_map(C({1, -1})).z, (std::vector<Q>{0, -1}));
  EXPECT_EQ(vieta_map(C({Q(5, 2), Q(5, 2)})).z, (std::vector<Q>{-5, Q(25, 4)}));
}

TEST(Disc, Examples) {
  EXPECT_EQ(disc_config(C({1, -1})), Q(4));
  EXPECT_EQ(disc_config(C({0, 1, 2})), Q(4));
  EXPECT_EQ(disc_config(Configuration<G>({G(1), G(-1), G(0, 1), G(0, -1)})), G(-256));
  EXPECT_EQ(disc_config(C({3, 1, 3})), Q(0));
}

TEST(Barycenter, Examples) {
  auto split = barycenter_project(C({1, 2, 3}));
  EXPECT_EQ(split.bc, Q(2));
  EXPECT_TRUE(same_configuration(split.balanced, C({-1, 0, 1})));
  EXPECT_EQ(barycenter_project(C({-1, 0, 1})).bc, Q(0));
  auto dbl = barycenter_project(C({4, 4}));
  EXPECT_EQ(dbl.bc, Q(4));
  EXPECT_TRUE(same_configuration(dbl.balanced, C({0, 0})));
}

TEST(Chart, HandExpansions) {
  using P = MultiPoly<Q>;
  const P w2 = P::variable("w2"), w3 = P::variable("w3"), y = P::variable("y");
  auto z2 = chart_blc_coeffs(std::vector<P>{w2}, y);
  EXPECT_EQ(z2[0], P::constant(-2) * y);
  EXPECT_EQ(z2[1], w2 + y * y);
  auto z3 = chart_blc_coeffs(std::vector<P>{w2, w3}, y);
  EXPECT_EQ(z3[0], P::constant(-3) * y);
  EXPECT_EQ(z3[1], P::constant(3) * y * y + w2);
  EXPECT_EQ(z3[2], -(y * y * y) - w2 * y + w3);
  auto flat = chart_blc(ChartPoint<Q>{{5, 7}, 0});
  EXPECT_EQ(flat.z, (std::vector<Q>{0, 5, 7}));
}

TEST(Membership, Examples) {
  C sym({-1, 0, 1});
  EXPECT_TRUE(membership(sym, SpaceTag::Cn));
  EXPECT_TRUE(membership(sym, SpaceTag::CnBlc));
  EXPECT_FALSE(membership(sym, SpaceTag::SC));
  using E = Eisenstein;
  CoeffPoint<E> x{{E(0), E(0), E(Q(0), Q(1, 3)), E(Q(1, 4))}};
  EXPECT_TRUE(membership(x, SpaceTag::SCBlc));
  EXPECT_TRUE(membership(C({2, 2, 9}), SpaceTag::Sigma));
  EXPECT_FALSE(membership(C({0, 1, 2}), SpaceTag::CnCstar));
  EXPECT_EQ(parse_space_tag("SC_blc"), SpaceTag::SCBlc);
  EXPECT_THROW(parse_space_tag("nope"), InputError);
}

TEST(Roots, Examples) {
  auto r2 = roots_numeric({Complex(0), Complex(-1)});
  EXPECT_TRUE(same_configuration(r2, Configuration<Complex>({Complex(1), Complex(-1)}), 1e-12));
  auto r3 = roots_numeric({Complex(-6), Complex(11), Complex(-6)});
  EXPECT_TRUE(same_configuration(r3, Configuration<Complex>({Complex(1), Complex(2), Complex(3)}), 1e-12));
  auto r4 = roots_numeric({Complex(0), Complex(0), Complex(0), Complex(-1)});
  EXPECT_TRUE(same_configuration(r4, Configuration<Complex>({Complex(1), Complex(-1), Complex(0, 1), Complex(0, -1)}), 1e-12));
}

TEST(Roots, ResidualsAreSmallOnRandomPolynomials) {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(rng.uniform(2, 8));
    std::vector<Complex> z;
    for (int k = 0; k < n; ++k) z.push_back(random_scalar<Complex>(rng));
    for (const auto& x : roots_numeric(z).points) {
      Complex v(1);
      for (const auto& c : z) v = v * x + c;
      ASSERT_LT(std::abs(v), 1e-9);
    }
  }
}

TEST(Hn, ExamplesAndInvariance) {
  EXPECT_EQ(h_n(C({1, 2})), Q(1, 2));
  EXPECT_THROW(h_n(C({0, 2})), DomainError);
  EXPECT_THROW(h_n(C({2, 2})), DomainError);
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    auto q = random_distinct<G>(rng, 4, false, true);
    const G c = random_nonzero<G>(rng);
    Configuration<G> cq = q, inv = q;
    for (auto& p : cq.points) p = c * p;
    for (auto& p : inv.points) p = G(1) / p;
    ASSERT_EQ(h_n(cq), h_n(q));
    ASSERT_EQ(h_n(inv), h_n(q));
  }
}

TEST(SigmaIso, Examples) {
  EXPECT_TRUE(same_configuration(sigma_blc_phi(C({2, -4, 1, 1})), C({1, -5})));
  EXPECT_TRUE(same_configuration(sigma_blc_psi(C({1, -5})), C({2, -4, 1, 1})));
  EXPECT_THROW(sigma_blc_phi(C({1, 2, 3, 4})), DomainError);
}

TEST(Cstar, EtaAndPhiTilde) {
  auto e = eta(C({2, 4}, true));
  EXPECT_EQ(e.ratios.points, std::vector<Q>{Q(1, 2)});
  EXPECT_EQ(e.y, Q(4));
  EXPECT_EQ(eta_inv(e).points, (std::vector<Q>{2, 4}));
  auto p = phi_tilde(C({1, 2}, true));  // bc = 3/2, shift 1
  EXPECT_EQ(p.points, (std::vector<Q>{0, 1, -1}));
  EXPECT_EQ(phi_tilde_inv(p).points, (std::vector<Q>{1, 2}));
  EXPECT_THROW(eta(C({0, 4}, true)), DomainError);
}

TEST(Involutions, Definitions) {
  C q({2, 3, 4}, true);
  EXPECT_EQ(involution(q, Involution::Iota).points, (std::vector<Q>{Q(1, 2), Q(1, 3), Q(1, 4)}));
  EXPECT_EQ(involution(q, Involution::TauInv).points, (std::vector<Q>{Q(1, 8), Q(3, 16), Q(1, 4)}));
  EXPECT_EQ(involution(q, Involution::SigmaPrime).points, (std::vector<Q>{Q(8, 3), Q(16, 3), 4}));
  EXPECT_EQ(involution(q, Involution::Rho).points, (std::vector<Q>{-2, -1, -4}));
  auto u = involution_U(Q(4), Q(2));
  EXPECT_EQ(u.first, Q(4));
  EXPECT_EQ(u.second, Q(2));
  auto g = involution_U(Q(6), Q(0));
  EXPECT_EQ(g.first * g.first - Q(4) * g.second, Q(0));
}

TEST(Mobius, Examples) {
  C q({Q(1, 3), 5}, true);
  EXPECT_EQ(mobius_action(Perm(5), q).points, q.points);
  EXPECT_EQ(mobius_action(Perm::transposition(5, 3, 4), q).points, (std::vector<Q>{Q(2, 3), -4}));
  EXPECT_EQ(mobius_action(Perm::transposition(5, 3, 5), q).points, (std::vector<Q>{3, Q(1, 5)}));
  EXPECT_THROW(mobius_action(Perm(4), q), InputError);
  EXPECT_THROW(mobius_action(Perm(5), C({1, 5}, true)), DomainError);
}

TEST(Mobius, ActionAxiomExact) {
  Rng rng(23);
  const auto s5 = std::vector<Perm>{Perm::transposition(5, 1, 2), Perm::transposition(5, 2, 3),
                                    Perm::transposition(5, 3, 4), Perm::transposition(5, 4, 5)};
  for (int i = 0; i < 40; ++i) {
    C q({Q(2, 7), Q(-5, 3)}, true);
    const Perm& a = s5[rng.uniform(0, 3)];
    const Perm& b = s5[rng.uniform(0, 3)];
    ASSERT_EQ(mobius_action(a * b, q).points, mobius_action(a, mobius_action(b, q)).points);
  }
}
