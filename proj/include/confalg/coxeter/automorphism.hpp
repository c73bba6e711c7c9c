#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "confalg/coxeter/group.hpp"
#include "confalg/errors.hpp"

namespace confalg {

/// Automorphisms of a finite group as permutations of element indices.
struct AutomorphismData {
  std::vector<int> generators;            // greedy generating set (indices)
  std::vector<std::vector<int>> autos;    // each maps index -> index
  std::size_t inner_count = 0;

  std::size_t aut_order() const { return autos.size(); }
  std::size_t out_order() const { return inner_count ? autos.size() / inner_count : 0; }
};

namespace detail {

inline std::vector<int> subgroup_closure(const std::vector<std::vector<int>>& table, const std::vector<int>& gens) {
  std::vector<int> elems{0};
  std::vector<bool> in(table.size(), false);
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (int g : gens) {
      int x = table[elems[head]][g];
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  return elems;
}

}  // namespace detail

/// Backtracking over images of a greedy generating set. Every candidate is
/// checked on the Cayley graph (well defined) and for bijectivity; accepted
/// maps are re-verified on the full multiplication table.
template <class E>
AutomorphismData automorphism_search(const FiniteGroup<E>& g) {
  const std::size_t n = g.order();
  if (n > 1000) throw DomainError("automorphism search limited to order <= 1000");
  const auto table = g.multiplication_table();
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = g.element_order(g[i]);

  AutomorphismData out;
  // Greedy generating set, preferring elements of large order.
  std::vector<int> candidates(n);
  for (std::size_t i = 0; i < n; ++i) candidates[i] = static_cast<int>(i);
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return order[a] > order[b]; });
  std::vector<bool> covered(n, false);
  covered[0] = true;
  for (int c : candidates) {
    if (covered[c]) continue;
    out.generators.push_back(c);
    for (int x : detail::subgroup_closure(table, out.generators)) covered[x] = true;
  }

  // Spanning tree of the Cayley graph: elem = parent * generator.
  std::vector<int> parent(n, -1), via(n, -1), bfs{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (std::size_t j = 0; j < out.generators.size(); ++j) {
      int x = table[bfs[head]][out.generators[j]];
      if (!seen[x]) {
        seen[x] = true;
        parent[x] = bfs[head];
        via[x] = static_cast<int>(j);
        bfs.push_back(x);
      }
    }

  const std::size_t k = out.generators.size();
  std::vector<int> images(k, -1);
  auto try_candidate = [&]() {
    std::vector<int> phi(n, -1);
    phi[0] = 0;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      int x = bfs[i];
      phi[x] = table[phi[parent[x]]][images[via[x]]];
    }
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (hit[phi[x]]) return;
      hit[phi[x]] = true;
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t j = 0; j < k; ++j)
        if (phi[table[x][out.generators[j]]] != table[phi[x]][images[j]]) return;
    out.autos.push_back(std::move(phi));
  };
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j == k) {
      try_candidate();
      return;
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (order[y] != order[out.generators[j]]) continue;
      images[j] = static_cast<int>(y);
      self(self, j + 1);
    }
  };
  recurse(recurse, 0);

  for (const auto& phi : out.autos)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (phi[table[a][b]] != table[phi[a]][phi[b]]) throw DomainError("automorphism search produced a non-homomorphism");

  std::set<std::vector<int>> inner;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<int> phi(n);
    for (std::size_t x = 0; x < n; ++x) phi[x] = g.index_of(FiniteGroup<E>::conjugate(g[c], g[x]));
    inner.insert(std::move(phi));
  }
  out.inner_count = inner.size();
  return out;
}

}  // namespace confalg
