#include <gtest/gtest.h>

#include <set>

#include "confalg/coxeter/automorphism.hpp"
#include "confalg/coxeter/group.hpp"
#include "confalg/coxeter/verifiers.hpp"
#include "confalg/io/json.hpp"

using namespace confalg;

namespace {

// Oracle: g normalizes H iff g h g^-1 lies in H for every h.
template <class E>
std::set<E> brute_normalizer(const FiniteGroup<E>& g, const std::vector<E>& h) {
  std::set<E> hs(h.begin(), h.end()), out;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& y : h) ok = ok && hs.count(x * y * x.inverse());
    if (ok) out.insert(x);
  }
  return out;
}

}  // namespace

TEST(Perm, Conventions) {
  Perm a = Perm::from_images({2, 3, 1});  // 1 -> 2 -> 3 -> 1
  EXPECT_EQ(a(0), 1);
  EXPECT_EQ(a.to_string(), "(1,2,3)");
  Perm b = Perm::transposition(3, 1, 2);
  // (a b)(i) = a(b(i)): 1 -> 2 -> 3.
  EXPECT_EQ((a * b)(0), 2);
  EXPECT_EQ((b * a)(0), 0);
  EXPECT_EQ(Perm::from_cycles(3, {{1, 2, 3}}), a);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(io::perm_to_json(a), io::json::array({2, 3, 1}));
  EXPECT_EQ(io::perm_from_json(io::json::array({2, 3, 1})), a);
  EXPECT_THROW(Perm::from_images({1, 1, 2}), InputError);
}

TEST(SignedPerm, Composition) {
  auto e1 = SignedPerm::sign_change(2, 1);
  auto s = SignedPerm::from_perm(Perm::transposition(2, 1, 2));
  EXPECT_TRUE((e1 * e1).is_identity());
  EXPECT_FALSE((e1 * s * e1 * s).is_identity());
  auto w0 = e1 * s * e1 * s;
  EXPECT_TRUE((w0 * w0).is_identity());
}

TEST(Groups, Orders) {
  const long fact[] = {1, 1, 2, 6, 24, 120};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(static_cast<long>(symmetric_group(n).order()), fact[n]);
  EXPECT_EQ(hyperoctahedral_group(2).order(), 8u);
  EXPECT_EQ(hyperoctahedral_group(3).order(), 48u);
  EXPECT_EQ(sign_subgroup(3).size(), 8u);
  EXPECT_EQ(hyperoctahedral_group(3).center().size(), 2u);
}

TEST(Groups, NormalizerMatchesBruteForce) {
  auto s4 = symmetric_group(4);
  std::vector<std::vector<Perm>> subgroups{
      FiniteGroup<Perm>(Perm(4), {Perm::transposition(4, 1, 2)}).elements(),
      FiniteGroup<Perm>(Perm(4), {Perm::from_cycles(4, {{1, 2, 3}})}).elements(),
      FiniteGroup<Perm>(Perm(4), {Perm::from_cycles(4, {{1, 2}, {3, 4}}), Perm::from_cycles(4, {{1, 3}, {2, 4}})}).elements(),
      FiniteGroup<Perm>(Perm(4), {Perm::from_cycles(4, {{1, 2, 3, 4}})}).elements()};
  const std::size_t expected[] = {4, 6, 24, 8};
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    auto norm = s4.normalizer(subgroups[i]);
    EXPECT_EQ(std::set<Perm>(norm.begin(), norm.end()), brute_normalizer(s4, subgroups[i]));
    EXPECT_EQ(norm.size(), expected[i]);
  }
  auto wb3 = hyperoctahedral_group(3);
  auto e3 = sign_subgroup(3);
  EXPECT_EQ(wb3.normalizer(e3).size(), 48u);
  EXPECT_TRUE(wb3.is_normal(e3));
}

TEST(Groups, ConjugacyClassesOfS4) {
  auto s4 = symmetric_group(4);
  auto classes = s4.conjugacy_classes();
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 3, 6, 6, 8}));
}

TEST(Automorphisms, SmallGroups) {
  auto klein = FiniteGroup<Perm>(Perm(4), {Perm::from_cycles(4, {{1, 2}, {3, 4}}), Perm::from_cycles(4, {{1, 3}, {2, 4}})});
  auto dk = automorphism_search(klein);
  EXPECT_EQ(dk.aut_order(), 6u);
  EXPECT_EQ(dk.inner_count, 1u);
  auto s3 = automorphism_search(symmetric_group(3));
  EXPECT_EQ(s3.aut_order(), 6u);
  EXPECT_EQ(s3.inner_count, 6u);
  auto wb2 = automorphism_search(hyperoctahedral_group(2));
  EXPECT_EQ(wb2.aut_order(), 8u);
  EXPECT_EQ(wb2.inner_count, 4u);
  EXPECT_EQ(wb2.out_order(), 2u);
  auto c5 = automorphism_search(FiniteGroup<Perm>(Perm(5), {Perm::from_cycles(5, {{1, 2, 3, 4, 5}})}));
  EXPECT_EQ(c5.aut_order(), 4u);
}

TEST(Verifiers, AllChecksPass) {
  for (const auto& c : coxeter_suite()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Verifiers, SignSubgroupCharacteristicOnlyForThree) {
  EXPECT_TRUE(wb_sign_subgroup_check(3).passed);
  EXPECT_TRUE(wb_sign_subgroup_check(2).passed);
  EXPECT_EQ(stab_pair_normalizer(4).detail, "order 48, equals H x <(n,n+2)>");
}
