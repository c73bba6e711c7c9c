#include <gtest/gtest.h>

#include <random>

#include "confalg/exactalg.hpp"
#include "confalg/random.hpp"

using namespace confalg;
using Q = Rational;
using G = Gaussian;
using E = Eisenstein;
using P = MultiPoly<Q>;

namespace {

// Oracle: cofactor expansion along the first row.
Q laplace_det(const std::vector<std::vector<Q>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Q det(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Q>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Q> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Q term = m[0][c] * laplace_det(minor);
    det = c % 2 ? det - term : det + term;
  }
  return det;
}

P random_poly(Rng& rng) {
  const P x = P::variable("x"), y = P::variable("y"), z = P::variable("z");
  P p;
  for (int t = 0; t < 4; ++t)
    p += P::constant(rng.rational()) * x.pow(rng.uniform(0, 2)) * y.pow(rng.uniform(0, 2)) * z.pow(rng.uniform(0, 1));
  return p;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Q(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Q::parse(" 10/4 "), Q(5, 2));
  EXPECT_THROW(Q::parse("1/0"), InputError);
  EXPECT_THROW(Q::parse("x"), InputError);
  EXPECT_THROW(Q(1) / Q(0), DomainError);
}

TEST(QuadExt, DeltaSquaresToD) {
  EXPECT_EQ(G::delta() * G::delta(), G(-1));
  EXPECT_EQ(E::delta() * E::delta(), E(-3));
  const E a = E::parse("1/2-3/4*d"), b = E::parse("2+d");
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(E::parse(a.to_string()), a);
  // (a + b d)(c + e d) = (ac + d^2 be) + (ae + bc) d
  EXPECT_EQ(E(Q(1), Q(2)) * E(Q(3), Q(5)), E(Q(3 - 3 * 10), Q(5 + 6)));
  const E z6(Q(1, 2), Q(1, 2));
  EXPECT_EQ(power(z6, 6), E(1));
  EXPECT_NE(power(z6, 3), E(1));
}

TEST(MultiPoly, Examples) {
  const P z1 = P::variable("z1"), z2 = P::variable("z2");
  const P d2 = z1 * z1 - P::constant(4) * z2;
  EXPECT_EQ(d2.eval({"z1", "z2"}, std::vector<Q>{0, -1}), Q(4));
  EXPECT_EQ(d2 + P(), d2);
  EXPECT_EQ((z1 * z1 * z2 * z2).partial("z2"), P::constant(2) * z1 * z1 * z2);
}

TEST(MultiPoly, RingAxiomsOnRandomTriples) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    P a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(MultiPoly, SequentialSubstitutionMatchesSimultaneous) {
  Rng rng(12);
  const P u = P::variable("u"), v = P::variable("v");
  for (int i = 0; i < 30; ++i) {
    P p = random_poly(rng);
    P q = u * u + P::constant(rng.rational()) * v, r = u - P::constant(3) * v * v;
    P seq = p.substitute("x", q).substitute("y", r);
    P sim = p.substitute(std::map<std::string, P>{{"x", q}, {"y", r}});
    ASSERT_EQ(seq, sim);
  }
}

TEST(Matrix, BareissMatchesCofactorExpansion) {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::vector<Q>> m(5, std::vector<Q>(5));
    for (auto& row : m)
      for (auto& x : row) x = rng.rational();
    if (i % 10 == 0) m[4] = m[1];  // singular cases
    ASSERT_EQ(determinant_bareiss(m), laplace_det(m));
  }
}

TEST(Resultant, Examples) {
  using UP = UniPoly<P>;
  const P z1 = P::variable("z1"), z2 = P::variable("z2"), a = P::variable("a"), b = P::variable("b");
  EXPECT_EQ(resultant(UP("l", {z2, z1, P::constant(1)}), UP("l", {z1, P::constant(2)})), P::constant(4) * z2 - z1 * z1);
  EXPECT_EQ(resultant(UP("l", {-a, P::constant(1)}), UP("l", {-b, P::constant(1)})), a - b);
  using UQ = UniPoly<Q>;
  EXPECT_EQ(resultant(UQ("l", {-1, 0, 1}), UQ("l", {-4, 0, 1})), Q(9));
}

TEST(Resultant, ProductOverRootsOracle) {
  // Res(f, g) = prod g(roots of f) for monic f.
  Rng rng(14);
  using UQ = UniPoly<Q>;
  for (int i = 0; i < 30; ++i) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    std::vector<Q> roots;
    for (int k = 0; k < n; ++k) roots.push_back(rng.rational());
    auto z = symmetric_expand(roots);
    std::vector<Q> fc(n + 1);
    fc[n] = 1;
    for (int k = 0; k < n; ++k) fc[n - 1 - k] = z[k];
    std::vector<Q> gc;
    const long deg = rng.uniform(1, 3);
    for (long k = 0; k <= deg; ++k) gc.push_back(rng.rational());
    if (gc.back().is_zero()) gc.back() = 1;
    UQ f("l", fc), g("l", gc);
    Q oracle(1);
    for (const auto& r : roots) oracle *= g.eval(r);
    ASSERT_EQ(resultant(f, g), oracle);
  }
}

TEST(Discriminant, Examples) {
  using UQ = UniPoly<Q>;
  EXPECT_EQ(discriminant_univariate(UQ("l", {-6, 11, -6, 1})), Q(4));
  EXPECT_EQ(discriminant_univariate(UQ("l", {-1, 0, 0, 0, 1})), Q(-256));
  const P z1 = P::variable("z1"), z2 = P::variable("z2");
  EXPECT_EQ(universal_discriminant<Q>(2), z1 * z1 - P::constant(4) * z2);
  EXPECT_THROW(discriminant_univariate(UQ("l", {1, 2})), InputError);
  EXPECT_THROW(discriminant_univariate(UQ("l", {1, 2, 3})), InputError);
}

TEST(Discriminant, ProductFormulaOracle) {
  Rng rng(15);
  for (int n = 2; n <= 5; ++n) {
    auto d = universal_discriminant<G>(n);
    for (int i = 0; i < 40; ++i) {
      std::vector<G> q;
      for (int k = 0; k < n; ++k) q.push_back(random_scalar<G>(rng));
      G oracle(1);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) oracle = oracle * (q[a] - q[b]) * (q[a] - q[b]);
      ASSERT_EQ(d.eval(MultiPoly<G>::names("z", 1, n), symmetric_expand(q)), oracle);
    }
  }
}

TEST(Symmetric, Examples) {
  EXPECT_EQ(symmetric_expand(std::vector<Q>{1, 2, 3}), (std::vector<Q>{-6, 11, -6}));
  EXPECT_EQ(symmetric_expand(std::vector<Q>{Q(7, 2)}), (std::vector<Q>{Q(-7, 2)}));
  EXPECT_EQ(symmetric_expand(std::vector<Q>{1, -1}), (std::vector<Q>{0, -1}));
}
