#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <type_traits>
#include <vector>

#include "confalg/coxeter/perm.hpp"
#include "confalg/errors.hpp"

namespace confalg {

/// Finite group given by generators; elements are enumerated by
/// breadth-first closure. E needs *, inverse(), identity_like(), <.
template <class E>
class FiniteGroup {
public:
  static constexpr std::size_t kSizeCap = 1000000;

  FiniteGroup(const E& identity, std::vector<E> generators) : gens_(std::move(generators)) {
    elems_.push_back(identity);
    index_.emplace(identity, 0);
    for (std::size_t head = 0; head < elems_.size(); ++head) {
      for (const auto& g : gens_) {
        E x = elems_[head] * g;
        if (index_.count(x)) continue;
        if (elems_.size() >= kSizeCap) throw DomainError("group closure exceeds size cap");
        index_.emplace(x, static_cast<int>(elems_.size()));
        elems_.push_back(std::move(x));
      }
    }
  }

  std::size_t order() const { return elems_.size(); }
  const std::vector<E>& elements() const { return elems_; }
  const std::vector<E>& generators() const { return gens_; }
  const E& identity() const { return elems_[0]; }
  const E& operator[](std::size_t i) const { return elems_[i]; }

  int index_of(const E& x) const {
    auto it = index_.find(x);
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const E& x) const { return index_.count(x) > 0; }

  static E conjugate(const E& g, const E& x) { return g * x * g.inverse(); }

  int element_order(const E& x) const {
    int k = 1;
    E y = x;
    while (!y.is_identity()) {
      y = y * x;
      ++k;
    }
    return k;
  }

  /// Conjugacy classes as sorted index lists, ordered by smallest member.
  std::vector<std::vector<int>> conjugacy_classes() const {
    std::vector<int> cls(elems_.size(), -1);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (cls[i] >= 0) continue;
      std::set<int> members;
      for (const auto& g : elems_) members.insert(index_of(conjugate(g, elems_[i])));
      for (int m : members) cls[m] = static_cast<int>(out.size());
      out.emplace_back(members.begin(), members.end());
    }
    return out;
  }

  std::vector<E> center() const { return centralizer(elems_); }

  std::vector<E> centralizer(const std::vector<E>& subset) const {
    std::vector<E> out;
    for (const auto& g : elems_) {
      bool ok = std::all_of(subset.begin(), subset.end(), [&](const E& h) { return g * h == h * g; });
      if (ok) out.push_back(g);
    }
    return out;
  }

  /// Elements g with g H g^{-1} = H for a finite subgroup H.
  std::vector<E> normalizer(const std::vector<E>& subgroup) const {
    std::set<E> h(subgroup.begin(), subgroup.end());
    std::vector<E> out;
    for (const auto& g : elems_) {
      E gi = g.inverse();
      bool ok = std::all_of(subgroup.begin(), subgroup.end(),
                            [&](const E& x) { return h.count(g * x * gi) > 0; });
      if (ok) out.push_back(g);
    }
    return out;
  }

  /// Stabilizer of a point (0-based) for permutation groups.
  std::vector<E> stabilizer(int point) const
    requires std::is_same_v<E, Perm>
  {
    std::vector<E> out;
    for (const auto& g : elems_)
      if (g(point) == point) out.push_back(g);
    return out;
  }

  bool is_normal(const std::vector<E>& subgroup) const { return normalizer(subgroup).size() == order(); }

  /// Cayley table by element index; memory grows as |G|^2.
  std::vector<std::vector<int>> multiplication_table() const {
    std::vector<std::vector<int>> t(elems_.size(), std::vector<int>(elems_.size()));
    for (std::size_t a = 0; a < elems_.size(); ++a)
      for (std::size_t b = 0; b < elems_.size(); ++b) t[a][b] = index_of(elems_[a] * elems_[b]);
    return t;
  }

private:
  std::vector<E> gens_;
  std::vector<E> elems_;
  std::map<E, int> index_;
};

/// Symmetric group S(n) generated by the adjacent transpositions (i, i+1).
inline FiniteGroup<Perm> symmetric_group(int n) {
  std::vector<Perm> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Perm::transposition(n, i, i + 1));
  return FiniteGroup<Perm>(Perm(n), gens);
}

/// Hyperoctahedral group WB_n generated by epsilon_1 and the sigma_i.
inline FiniteGroup<SignedPerm> hyperoctahedral_group(int n) {
  std::vector<SignedPerm> gens{SignedPerm::sign_change(n, 1)};
  for (int i = 1; i < n; ++i) gens.push_back(SignedPerm::from_perm(Perm::transposition(n, i, i + 1)));
  return FiniteGroup<SignedPerm>(SignedPerm(n), gens);
}

/// The sign-change subgroup E_n = (Z/2)^n of WB_n.
inline std::vector<SignedPerm> sign_subgroup(int n) {
  std::vector<SignedPerm> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
    out.emplace_back(Perm(n), s);
  }
  return out;
}

}  // namespace confalg
