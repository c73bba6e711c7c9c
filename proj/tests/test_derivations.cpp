#include <gtest/gtest.h>

#include "confalg/derivations/derivation.hpp"
#include "confalg/derivations/fields.hpp"
#include "confalg/io/json.hpp"

using namespace confalg;
using Q = Rational;
using P = MultiPoly<Q>;

TEST(Derivation, LeibnizOnExamples) {
  Derivation<Q> d({"x", "y"});
  d.set_image("x", P::variable("y"));
  const P x = P::variable("x"), y = P::variable("y");
  EXPECT_EQ(d.apply(x * x), P::constant(2) * x * y);
  EXPECT_EQ(d.apply(x * y), y * y);
  EXPECT_TRUE(d.apply(y).is_zero());
}

TEST(Derivation, BracketOfPartials) {
  // [x d/dy, y d/dx] = x d/dx - y d/dy
  const P x = P::variable("x"), y = P::variable("y");
  Derivation<Q> a({"x", "y"}), b({"x", "y"}), expect({"x", "y"});
  a.set_image("y", x);
  b.set_image("x", y);
  expect.set_image("x", x);
  expect.set_image("y", -y);
  EXPECT_EQ(bracket(a, b), expect);
  EXPECT_TRUE(bracket(a, a).is_zero());
}

TEST(Fields, TauFieldImages) {
  auto d = tau_field<Q>(3);
  const P z1 = P::variable("z1"), z2 = P::variable("z2");
  EXPECT_EQ(d.image("z1"), P::constant(3));
  EXPECT_EQ(d.image("z2"), P::constant(2) * z1);
  EXPECT_EQ(d.image("z3"), z2);
}

TEST(Fields, OrientedFieldsSatisfyAllRelations) {
  for (int n = 2; n <= 5; ++n) {
    auto r = lie_relations(standard_fields<Q>(n, -1), 4);
    EXPECT_TRUE(r.st_commute) << n;
    EXPECT_TRUE(r.s_replica) << n;
    EXPECT_TRUE(r.replica_t) << n;
    EXPECT_GT(r.replicas_tested, 0);
  }
}

TEST(Fields, VerbatimFieldsNeedFlippedSigns) {
  for (int n = 2; n <= 4; ++n) {
    auto r = lie_relations(standard_fields<Q>(n, 1), 4);
    EXPECT_TRUE(r.st_commute) << n;
    EXPECT_FALSE(r.replica_t) << n;
    EXPECT_TRUE(verbatim_sign_relations<Q>(n, 4)) << n;
  }
}

TEST(Fields, TauGeneratesRootShiftWithNegativeSign) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_TRUE(flow_shift_identity<Q>(n, -1)) << n;
    EXPECT_FALSE(flow_shift_identity<Q>(n, 1)) << n;
  }
}

TEST(Fields, TauIsLocallyNilpotent) {
  auto r = lnd_check(tau_field<Q>(4), 10);
  EXPECT_TRUE(r.nilpotent);
  EXPECT_EQ(r.depth.at("z1"), 2);
  EXPECT_EQ(r.depth.at("z4"), 5);
}

TEST(Fields, EulerIsNotNilpotent) {
  auto r = lnd_check(euler_field<Q>(3), 6);
  EXPECT_FALSE(r.nilpotent);
  ASSERT_TRUE(r.eigen_var.has_value());
  EXPECT_EQ(*r.eigen_var, "z1");
  EXPECT_EQ(*r.eigen_value, Q(1));
}

TEST(Fields, Jacobi) {
  auto f = standard_fields<Q>(3, -1);
  const P z2 = P::variable("z2");
  EXPECT_TRUE(jacobi_holds(f.d_s, f.d_t, f.d_tau.replica(z2)));
  EXPECT_TRUE(jacobi_holds(f.euler, f.d_tau, f.d_tau.replica(z2 * z2)));
}

TEST(Fields, ChartPushforwardSign) {
  for (int n = 2; n <= 4; ++n) {
    auto r = chart_pushforward_check<Q>(n);
    EXPECT_EQ(r.eps, -1);
    EXPECT_TRUE(r.tau_consistent);
    EXPECT_TRUE(r.t_consistent);
    EXPECT_TRUE(r.s_oriented_euler);
    EXPECT_FALSE(r.s_verbatim_euler);
  }
}

TEST(Fields, ExpFlowOfTauIsTranslation) {
  // exp(c d/dx) applied to x^3 is (x + c)^3.
  Derivation<Q> d({"x"});
  d.set_image("x", P::constant(1));
  const P x = P::variable("x"), c = P::variable("c");
  EXPECT_EQ(exp_flow(d, c, x.pow(3), 5), (x + c).pow(3));
  Derivation<Q> e({"x"});
  e.set_image("x", x);
  EXPECT_THROW(exp_flow(e, c, x, 5), DomainError);
}

TEST(Danielewski, Surface) {
  auto r = danielewski_demo(1);
  EXPECT_TRUE(r.annihilates);
  EXPECT_TRUE(r.flow_formula);
  EXPECT_TRUE(r.preserves);
  EXPECT_EQ(r.alpha_at_q1, (std::vector<Q>{0, 2, 1, 1}));
}

TEST(Json, DerivationRoundTrip) {
  auto f = standard_fields<Q>(3, -1);
  EXPECT_EQ(io::derivation_from_json<Q>(io::derivation_to_json(f.d_s)), f.d_s);
}
