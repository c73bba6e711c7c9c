#include <gtest/gtest.h>

#include "confalg/autgroup/covering.hpp"
#include "confalg/autgroup/triangular.hpp"
#include "confalg/autgroup/zinde.hpp"
#include "confalg/io/json.hpp"
#include "confalg/random.hpp"

using namespace confalg;
using Q = Rational;
using G = Gaussian;
using C = Configuration<Q>;
using B = BalancedFunction<Q>;

namespace {

TriangularAut<Q> random_cn_aut(Rng& rng, int n) {
  B b = B::w_monomial(n, rng.nonzero_rational(), std::vector<unsigned>(n - 1, 0));
  std::vector<unsigned> e(n - 1, 0);
  e[0] = 1;
  b = b + B::w_monomial(n, rng.rational(), e);
  if (n >= 3) b = b + B::s_term(n, rng.rational(), 2, 0);
  return make_aut(AutSpace::Cn, n, rng.nonzero_rational(), rng.nonzero_rational(), static_cast<int>(rng.uniform(-1, 1)), b);
}

// Oracle: F(Q) = s Q° + t D(Q°)^k bc + b(Q°), written out point by point.
C by_hand(const TriangularAut<Q>& f, const C& q) {
  Q bc(0);
  for (const auto& p : q.points) bc += p;
  bc /= Q(q.n());
  C q0 = q;
  for (auto& p : q0.points) p -= bc;
  Q d(1);
  for (int i = 0; i < q.n(); ++i)
    for (int j = i + 1; j < q.n(); ++j) d *= (q0.points[i] - q0.points[j]) * (q0.points[i] - q0.points[j]);
  Q shift = f.t * power(d, f.k) * bc + f.b.eval(q0);
  C out = q0;
  for (auto& p : out.points) p = f.s * p + shift;
  return out;
}

}  // namespace

TEST(Triangular, ApplyExample) {
  auto f = make_aut(AutSpace::Cn, 2, Q(2), Q(3), 0, B(2));
  EXPECT_EQ(apply_aut(f, C({1, 3})).points, (std::vector<Q>{4, 8}));
  auto g = make_aut(AutSpace::Cn, 2, Q(2), Q(3), 0, B::constant(2, Q(5)));
  EXPECT_EQ(apply_aut(g, C({1, 3})).points, (std::vector<Q>{9, 13}));
  EXPECT_THROW(apply_aut(f, C({1, 1})), DomainError);
}

TEST(Triangular, ComposeAndInvertPointwise) {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    auto f = random_cn_aut(rng, n), g = random_cn_aut(rng, n);
    auto q = random_distinct<Q>(rng, n);
    auto fq = by_hand(f, q);
    if (near_zero(disc_config(fq), 0)) continue;
    ASSERT_TRUE(same_configuration(evaluate_aut(f, q), fq));
    ASSERT_TRUE(same_configuration(evaluate_aut(compose(g, f), q), by_hand(g, fq)));
    ASSERT_TRUE(same_configuration(evaluate_aut(invert(f), fq), q));
    ASSERT_TRUE(is_identity(compose(invert(f), f)));
  }
}

TEST(Triangular, OrderExamples) {
  EXPECT_EQ(aut_order(make_aut(AutSpace::Cn, 2, Q(-1), Q(1), 0, B(2))), 2);
  EXPECT_EQ(aut_order(make_aut(AutSpace::Cn, 3, G(0, 1), G(1), 0, BalancedFunction<G>(3))), 4);
  EXPECT_EQ(aut_order(make_aut(AutSpace::Cn, 3, G(-1), G(0, 1), 0, BalancedFunction<G>(3))), 4);
  EXPECT_EQ(aut_order(make_aut(AutSpace::Cn, 2, Q(2), Q(1), 0, B(2))), std::nullopt);
  EXPECT_EQ(aut_order(identity_aut<Q>(AutSpace::Cn, 3)), 1);
}

TEST(Triangular, ClosedFormPowerMatchesIteration) {
  Rng rng(32);
  for (int i = 0; i < 20; ++i) {
    auto f = random_cn_aut(rng, 3);
    f.k = 0;
    for (int m = 1; m <= 4; ++m) ASSERT_TRUE(same_aut(closed_form_power(f, m), power(f, m)));
  }
}

TEST(Triangular, ConstraintMessages) {
  try {
    make_aut(AutSpace::SC, 3, Q(2), Q(1), 0, B(3));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "SC requires s^{n(n-1)}=1");
  }
  EXPECT_THROW(make_aut(AutSpace::SC, 3, Q(1), Q(1), 1, B(3)), DomainError);
  EXPECT_THROW(make_aut(AutSpace::Sigma, 3, Q(1), Q(1), 0, B::constant(3, Q(1)).times_unit(Q(1), 1)), DomainError);
  EXPECT_THROW(make_aut(AutSpace::Pair, 3, Q(1), Q(1), 0, B::constant(3, Q(1)).times_unit(Q(1), -1)), DomainError);
  EXPECT_THROW(make_aut(AutSpace::Cn, 3, Q(0), Q(1), 0, B(3)), DomainError);
  EXPECT_THROW(make_aut(AutSpace::Cn, 3, Q(1), Q(1), 0, B(4)), InputError);
  EXPECT_NO_THROW(make_aut(AutSpace::SC, 4, G(0, 1), G(1), 0, BalancedFunction<G>(4)));
  EXPECT_THROW(make_aut(AutSpace::SC, 3, G(0, 1), G(1), 0, BalancedFunction<G>(3)), DomainError);
}

TEST(Balanced, ScaleArgMatchesEvaluation) {
  Rng rng(33);
  for (int i = 0; i < 30; ++i) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    auto f = random_cn_aut(rng, n);
    auto q0 = barycenter_project(random_distinct<Q>(rng, n)).balanced;
    const Q s = rng.nonzero_rational();
    C sq = q0;
    for (auto& p : sq.points) p *= s;
    ASSERT_EQ(f.b.scale_arg(s).eval(q0), f.b.eval(sq));
  }
}

TEST(Balanced, STermByHand) {
  // S_2 over ordered pairs of {-1, 0, 1}: 2 (1 + 1 + 4) = 12.
  EXPECT_EQ(B::s_term(3, Q(1), 2).eval(C({-1, 0, 1})), Q(12));
  // w2 of {-1, 0, 1} is -1.
  EXPECT_EQ(B::w_monomial(3, Q(1), {1, 0}).eval(C({-1, 0, 1})), Q(-1));
}

TEST(Triangular, InversionFormula) {
  const int m = 2;
  const Q s(-1), t(-1);
  // Even weights only, so F = (s, t, b) has order 2.
  B b = B::w_monomial(3, Q(1), {1, 0}) + B::constant(3, Q(3)) + B::w_monomial(3, Q(2), {2, 0});
  ASSERT_EQ(aut_order(make_aut(AutSpace::Cn, 3, s, t, 0, b)), 2);
  B bt = inversion_btilde(b, s, t, m);
  EXPECT_TRUE(same_function(t * bt - bt.scale_arg(s), b));
  B bv = inversion_btilde_verbatim(b, s, t, m);
  EXPECT_FALSE(same_function(t * bv - bv.scale_arg(s), b));
}

TEST(Triangular, TameMapReproducesF) {
  Rng rng(34);
  for (int i = 0; i < 20; ++i) {
    auto f = random_cn_aut(rng, 3);
    auto q = random_distinct<Q>(rng, 3);
    auto T = tame_affine_map(f, q);
    C tq = q;
    for (auto& p : tq.points) p = T(p);
    ASSERT_EQ(tq.points, evaluate_aut(f, q).points);
  }
}

TEST(Triangular, PolynomialMapMatchesVieta) {
  Rng rng(35);
  for (int n = 2; n <= 4; ++n) {
    std::vector<unsigned> e(n - 1, 0);
    e.back() = 1;
    auto f = make_aut(AutSpace::Cn, n, Q(2), Q(-3), 1, B::w_monomial(n, Q(1), e) + B::constant(n, Q(1, 2)));
    auto images = polynomial_map(f);
    const auto names = MultiPoly<Q>::names("z", 1, n);
    for (int i = 0; i < 5; ++i) {
      auto q = random_distinct<Q>(rng, n);
      auto z = vieta_map(q).z;
      auto expect = vieta_map(evaluate_aut(f, q)).z;
      for (int k = 0; k < n; ++k) ASSERT_EQ(images[k].eval(names, z), expect[k]);
    }
  }
}

TEST(Witness, CommutatorIsBarycenterScaling) {
  Rng rng(36);
  const Complex t(0.3, 1.7);
  auto w = commutator_witness(t, 3);
  for (int i = 0; i < 10; ++i) {
    auto q = random_distinct<Complex>(rng, 3);
    auto [bc, q0] = barycenter_project(q);
    Configuration<Complex> expect = q0;
    for (auto& p : expect.points) p += t * bc;
    ASSERT_TRUE(same_configuration(evaluate_aut(w.comm, q), expect, 1e-9));
  }
}

TEST(Witness, ShiftCommutator) {
  Rng rng(37);
  B b = B::w_monomial(3, Q(1), {0, 1}) + B::constant(3, Q(2));
  auto c = shift_commutator_witness(AutSpace::Cn, b);
  for (int i = 0; i < 10; ++i) {
    auto q = random_distinct<Q>(rng, 3);
    ASSERT_EQ(evaluate_aut(c, q).points, shift_action(Q(1), b, q).points);
  }
}

TEST(Covering, SevenPreimagesForCubics) {
  Configuration<Complex> q0({Complex(-1), Complex(0), Complex(1)});
  auto r = covering_preimages(Complex(1), 1, q0);
  EXPECT_EQ(r.degree, 7);
  EXPECT_EQ(r.preimages.size(), 7u);
  EXPECT_LT(r.max_residual, 1e-9);
  // omega^N c D^m = 1
  for (const auto& om : r.omegas) EXPECT_NEAR(std::abs(std::pow(om, 7) * 4.0 - 1.0), 0.0, 1e-9);
  EXPECT_THROW(covering_preimages(Complex(1), 1, Configuration<Complex>({Complex(1), Complex(2), Complex(3)})), DomainError);
}

TEST(Zinde, CompositionDoesNotCommute) {
  auto a = make_zinde(Q(1), 2, 1), b = make_zinde(Q(1), 0, -1);
  EXPECT_EQ(compose_zinde(a, b), make_zinde(Q(1), 2, -1));
  EXPECT_EQ(compose_zinde(b, a), make_zinde(Q(1), -2, -1));
  EXPECT_THROW(make_zinde(Q(0), 1, 1), DomainError);
  EXPECT_THROW(make_zinde(Q(1), 1, 2), InputError);
}

TEST(Zinde, CompositionAndInverseActPointwise) {
  Rng rng(38);
  for (int i = 0; i < 30; ++i) {
    auto f = make_zinde(rng.nonzero_rational(), static_cast<int>(rng.uniform(-2, 2)), rng.uniform(0, 1) ? 1 : -1);
    auto g = make_zinde(rng.nonzero_rational(), static_cast<int>(rng.uniform(-2, 2)), rng.uniform(0, 1) ? 1 : -1);
    auto q = random_distinct<Q>(rng, 3, true, true);
    ASSERT_EQ(apply_zinde(compose_zinde(f, g), q).points, apply_zinde(f, apply_zinde(g, q)).points);
    ASSERT_EQ(apply_zinde(invert_zinde(f), apply_zinde(f, q)).points, q.points);
  }
}

TEST(Json, AutRoundTrip) {
  Rng rng(39);
  for (int i = 0; i < 10; ++i) {
    auto f = random_cn_aut(rng, 3);
    auto g = io::aut_from_json<Q>(io::aut_to_json(f), 1e-9);
    ASSERT_TRUE(same_aut(f, g));
    ASSERT_EQ(io::aut_to_json(g), io::aut_to_json(f));
  }
}
