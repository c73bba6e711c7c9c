#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "confalg/coxeter/automorphism.hpp"
#include "confalg/coxeter/group.hpp"
#include "confalg/report.hpp"

namespace confalg {

/// Named elements of WB_2.
struct WB2Names {
  SignedPerm e, w0, eps1, eps2, sigma, w0sigma, eps1sigma, eps2sigma;

  WB2Names() {
    e = SignedPerm(2);
    eps1 = SignedPerm::sign_change(2, 1);
    eps2 = SignedPerm::sign_change(2, 2);
    w0 = eps1 * eps2;
    sigma = SignedPerm::from_perm(Perm::transposition(2, 1, 2));
    w0sigma = w0 * sigma;
    eps1sigma = eps1 * sigma;
    eps2sigma = eps2 * sigma;
  }
};

/// Classes of WB_2 compared elementwise with
/// {e}, {w0}, {eps1 sigma, eps2 sigma}, {eps1, eps2}, {sigma, w0 sigma}.
inline Check wb2_conjugacy_check() {
  auto g = hyperoctahedral_group(2);
  WB2Names nm;
  std::set<std::set<SignedPerm>> expected{{nm.e},
                                          {nm.w0},
                                          {nm.eps1sigma, nm.eps2sigma},
                                          {nm.eps1, nm.eps2},
                                          {nm.sigma, nm.w0sigma}};
  std::set<std::set<SignedPerm>> got;
  std::vector<std::size_t> sizes;
  for (const auto& cls : g.conjugacy_classes()) {
    std::set<SignedPerm> s;
    for (int i : cls) s.insert(g[i]);
    sizes.push_back(cls.size());
    got.insert(std::move(s));
  }
  std::sort(sizes.begin(), sizes.end());
  std::string detail = "order " + std::to_string(g.order()) + ", class sizes";
  for (auto s : sizes) detail += " " + std::to_string(s);
  return {"WB2 conjugacy classes match elementwise", "conjugacy classes of WB2", got == expected && g.order() == 8,
          detail};
}

/// The graph involution eps1 <-> sigma, eps2 <-> w0 sigma, eps1 sigma <-> eps2 sigma.
inline std::map<SignedPerm, SignedPerm> wb2_graph_involution() {
  WB2Names nm;
  return {{nm.e, nm.e},           {nm.w0, nm.w0},           {nm.eps1, nm.sigma},
          {nm.sigma, nm.eps1},    {nm.eps2, nm.w0sigma},    {nm.w0sigma, nm.eps2},
          {nm.eps1sigma, nm.eps2sigma}, {nm.eps2sigma, nm.eps1sigma}};
}

inline Report wb2_automorphism_checks() {
  Report r;
  auto g = hyperoctahedral_group(2);
  auto data = automorphism_search(g);
  r.push_back({"|Aut(WB2)| = 8, |Inn| = 4, |Out| = 2", "outer automorphism group of WB2 is cyclic of order 2",
               data.aut_order() == 8 && data.inner_count == 4 && data.out_order() == 2,
               "Aut " + std::to_string(data.aut_order()) + ", Inn " + std::to_string(data.inner_count) + ", Out " +
                   std::to_string(data.out_order())});
  auto alpha = wb2_graph_involution();
  std::vector<int> phi(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) phi[i] = g.index_of(alpha.at(g[i]));
  bool is_auto = std::find(data.autos.begin(), data.autos.end(), phi) != data.autos.end();
  bool outer = true;
  for (std::size_t c = 0; c < g.order(); ++c) {
    bool same = true;
    for (std::size_t x = 0; x < g.order() && same; ++x)
      same = g.index_of(FiniteGroup<SignedPerm>::conjugate(g[c], g[x])) == phi[x];
    if (same) outer = false;
  }
  r.push_back({"graph involution is an outer automorphism of WB2", "involution interchanging eps1 and sigma",
               is_auto && outer, is_auto ? (outer ? "automorphism, not inner" : "inner") : "not a homomorphism"});
  return r;
}

/// For n = 3 every automorphism stabilizes E_n; for n = 2 one does not.
inline Check wb_sign_subgroup_check(int n) {
  auto g = hyperoctahedral_group(n);
  auto data = automorphism_search(g);
  std::set<int> e;
  for (const auto& x : sign_subgroup(n)) e.insert(g.index_of(x));
  std::size_t stabilizing = 0;
  for (const auto& phi : data.autos) {
    std::set<int> img;
    for (int x : e) img.insert(phi[x]);
    if (img == e) ++stabilizing;
  }
  const bool normal = g.is_normal(sign_subgroup(n));
  std::string detail = std::to_string(stabilizing) + " of " + std::to_string(data.aut_order()) +
                       " automorphisms stabilize E" + std::to_string(n) + (normal ? ", normal" : ", not normal");
  if (n >= 3)
    return {"E" + std::to_string(n) + " characteristic in WB" + std::to_string(n),
            "E_n is characteristic in WB_n for n >= 3", normal && stabilizing == data.aut_order(), detail};
  return {"E2 not characteristic in WB2", "graph involution does not stabilize E2",
          normal && stabilizing < data.aut_order(), detail};
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Inside S(n+2): the normalizer of Stab(n) and Stab(n+2) jointly is
/// H x <(n, n+2)>, of order 2 n!.
inline Check stab_pair_normalizer(int n) {
  auto g = symmetric_group(n + 2);
  std::vector<Perm> h;
  for (const auto& p : g.elements())
    if (p(n - 1) == n - 1 && p(n + 1) == n + 1) h.push_back(p);
  auto norm = g.normalizer(h);
  Perm swap = Perm::transposition(n + 2, n, n + 2);
  std::set<Perm> expected(h.begin(), h.end());
  for (const auto& x : h) expected.insert(x * swap);
  bool equal = std::set<Perm>(norm.begin(), norm.end()) == expected;
  bool ok = equal && static_cast<long>(norm.size()) == 2 * factorial(n);
  return {"normalizer of H in S(" + std::to_string(n + 2) + ") has order 2*" + std::to_string(n) + "!",
          "normalizer of the stabilizer of n and n+2", ok,
          "order " + std::to_string(norm.size()) + (equal ? ", equals H x <(n,n+2)>" : ", differs from H x <(n,n+2)>")};
}

/// Stab(n+2) is self-normalizing in S(n+2).
inline Check stab_self_normalizing(int n) {
  auto g = symmetric_group(n + 2);
  auto h = g.stabilizer(n + 1);
  auto norm = g.normalizer(h);
  bool ok = std::set<Perm>(norm.begin(), norm.end()) == std::set<Perm>(h.begin(), h.end()) &&
            static_cast<long>(norm.size()) == factorial(n + 1);
  return {"Stab(" + std::to_string(n + 2) + ") self-normalizing in S(" + std::to_string(n + 2) + ")",
          "normalizer of the stabilizer of n+2", ok, "order " + std::to_string(norm.size())};
}

struct KleinImages {
  Perm s, t, u, v;
};

/// Braid generators sigma_i sent to (i, i+1) in S(4).
inline KleinImages klein_images() {
  Perm s1 = Perm::transposition(4, 1, 2), s2 = Perm::transposition(4, 2, 3), s3 = Perm::transposition(4, 3, 4);
  Perm s1i = s1.inverse(), s2i = s2.inverse();
  return {s3 * s1i, s2 * s3 * s1i * s2i, s2 * s1i, s1 * s2 * s1i * s1i};
}

inline Report klein_example() {
  Report r;
  auto k = klein_images();
  const std::string anchor = "Klein four-group in the alternating group A4";
  r.push_back({"image(s) = (1,2)(3,4)", anchor, k.s.to_string() == "(1,2)(3,4)", k.s.to_string()});
  FiniteGroup<Perm> klein(Perm(4), {k.s, k.t});
  bool all_double = true;
  for (const auto& x : klein.elements())
    if (!x.is_identity() && (x * x != Perm(4) || x(0) == 0 || x(1) == 1 || x(2) == 2 || x(3) == 3)) all_double = false;
  r.push_back({"images of s, t generate the Klein four-group", anchor, klein.order() == 4 && all_double,
               "order " + std::to_string(klein.order()) + ", t -> " + k.t.to_string()});
  FiniteGroup<Perm> cu(Perm(4), {k.u});
  bool three_cycles = cu.order() == 3 && k.u * k.v == Perm(4) && k.v * k.u == Perm(4);
  r.push_back({"images of u, v are mutually inverse 3-cycles", anchor, three_cycles,
               "u -> " + k.u.to_string() + ", v -> " + k.v.to_string()});
  Perm uv = k.u * k.v, st = k.s * k.t;
  r.push_back({"image(uv) = id while image(st) is nontrivial", anchor,
               uv.is_identity() && !st.is_identity() && klein.contains(st), "st -> " + st.to_string()});
  return r;
}

inline Report coxeter_suite() {
  Report r;
  r.push_back(wb2_conjugacy_check());
  append(r, wb2_automorphism_checks());
  r.push_back(wb_sign_subgroup_check(3));
  r.push_back(wb_sign_subgroup_check(2));
  for (int n = 3; n <= 5; ++n) r.push_back(stab_pair_normalizer(n));
  for (int n = 3; n <= 5; ++n) r.push_back(stab_self_normalizing(n));
  append(r, klein_example());
  return r;
}

}  // namespace confalg
