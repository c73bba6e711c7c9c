#include <gtest/gtest.h>

#include "confalg/elliptic/quartic.hpp"
#include "confalg/random.hpp"

using namespace confalg;
using Q = Rational;
using E = Eisenstein;

namespace {

Quartic<Q> random_quartic(Rng& rng) { return {rng.rational(), rng.rational(), rng.rational()}; }

}  // namespace

TEST(Quartic, DiscriminantMatchesRootProduct) {
  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    std::vector<Q> r{rng.rational(), rng.rational(), rng.rational()};
    r.push_back(-(r[0] + r[1] + r[2]));
    auto z = symmetric_expand(r);
    ASSERT_TRUE(z[0].is_zero());
    Q oracle(1);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) oracle *= (r[a] - r[b]) * (r[a] - r[b]);
    ASSERT_EQ(quartic_discriminant(Quartic<Q>{z[1], z[2], z[3]}), oracle);
  }
}

TEST(Quartic, ResolventExample) {
  Quartic<Q> f{0, 0, -1};
  auto g = cubic_resolvent(f);
  EXPECT_EQ(g, (Cubic<Q>{0, 4, 0}));
  EXPECT_EQ(cubic_discriminant(g), Q(-256));
  EXPECT_EQ(quartic_discriminant(f), Q(-256));
}

TEST(Quartic, ResolventAndTschirnhausenPreserveDiscriminant) {
  Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    auto f = random_quartic(rng);
    const Q d = quartic_discriminant(f);
    ASSERT_EQ(cubic_discriminant(cubic_resolvent(f)), d);
    ASSERT_EQ(cubic_discriminant(depressed_cubic(tschirnhausen(f))), d);
    auto u = tschirnhausen(f);
    ASSERT_EQ(-(Q(4) * u.u2 * u.u2 * u.u2 + Q(27) * u.u3 * u.u3), d);
  }
}

TEST(Quartic, TschirnhausenExample) {
  auto u = tschirnhausen(Quartic<Q>{3, 1, 2});
  EXPECT_EQ(u.u2, Q(-3 - 8));
  EXPECT_EQ(u.u3, Q(16) - Q(2) - Q(1));
}

TEST(Surface, ExactPointsHaveUnitDiscriminant) {
  auto pts = exact_surface_points(12);
  ASSERT_EQ(pts.size(), 12u);
  for (const auto& f : pts) {
    ASSERT_EQ(quartic_discriminant(f), E(1));
    auto u = fibration_project(f);
    ASSERT_EQ(-(E(4) * u.u2 * u.u2 * u.u2 + E(27) * u.u3 * u.u3), E(1));
  }
  EXPECT_THROW(fibration_project(Quartic<E>{0, 0, -1}), DomainError);
}

TEST(Surface, Mu12EquivariantAndInvariant) {
  const E z6(Q(1, 2), Q(1, 2));
  for (const auto& f : exact_surface_points(6)) {
    for (E zeta = z6;; zeta = zeta * z6) {
      auto g = mu12_action(zeta, f);
      ASSERT_EQ(quartic_discriminant(g), E(1));
      ASSERT_EQ(tschirnhausen(g), mu12_action_base(zeta, tschirnhausen(f)));
      if (zeta == E(1)) break;
    }
  }
  EXPECT_THROW(require_12th_root(Complex(1.1, 0), 1e-9), DomainError);
  EXPECT_NO_THROW(require_12th_root(std::polar(1.0, std::numbers::pi / 6), 1e-9));
}

TEST(JInvariant, SignAgainstDisplayedFormula) {
  auto j = j_invariant(BasePoint<E>{E(-1), E(Q(1, 3))});
  EXPECT_EQ(j.oracle, E(6912));
  EXPECT_EQ(j.displayed, E(-6912));
  EXPECT_EQ(j.sign, -1);
  // u2^3 = -1/4, u3 = 0 has j = 1728.
  auto k = j_invariant(BasePoint<Complex>{std::pow(Complex(-0.25), 1.0 / 3.0), Complex(0)});
  EXPECT_NEAR(std::abs(k.oracle - 1728.0), 0.0, 1e-9);
  EXPECT_EQ(k.sign, -1);
  EXPECT_THROW(j_invariant(BasePoint<Q>{Q(-3), Q(2)}), DomainError);
}

TEST(Counterexample, ImageLiesOnSurface) {
  auto [a, b] = counterexample_constants();
  for (const auto& f : exact_surface_points(10)) {
    Quartic<Complex> x{to_complex(f.z2), to_complex(f.z3), to_complex(f.z4)};
    auto fx = counterexample_endo(x, a, b);
    EXPECT_NEAR(std::abs(quartic_discriminant(fx) - 1.0), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(12.0 * fx.z4 + fx.z2 * fx.z2), 0.0, 1e-9);
  }
}

TEST(Curve, AdditionStaysOnCurve) {
  // y^2 = x^3 - x - 1/3 over Q(sqrt -3), base point (0, d/3).
  const E g2(-1), g3(Q(-1, 3));
  CurvePoint<E> p{E(0), E(Q(0), Q(1, 3))}, acc = p;
  for (int k = 0; k < 5; ++k) {
    acc = curve_add(acc, p, g2);
    ASSERT_FALSE(acc.infinity);
    ASSERT_EQ(acc.y * acc.y, acc.x * acc.x * acc.x + g2 * acc.x + g3);
  }
  CurvePoint<E> neg{p.x, -p.y};
  EXPECT_TRUE(curve_add(p, neg, g2).infinity);
}
