#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "confalg/errors.hpp"

namespace confalg {

/// Permutation of {1..n}, stored 0-based. Composition is
/// (a * b)(i) = a(b(i)), i.e. b acts first.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

  static Perm identity(int n) { return Perm(n); }

  /// From 1-based images [sigma(1), ..., sigma(n)].
  static Perm from_images(const std::vector<int>& images) {
    Perm p;
    p.img_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int v = images[i] - 1;
      if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) throw InputError("not a permutation");
      seen[v] = true;
      p.img_[i] = v;
    }
    return p;
  }

  /// Product of 1-based cycles, e.g. {{1,2},{3,4}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      Perm c(n);
      const auto& cyc = *it;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i] - 1, b = cyc[(i + 1) % cyc.size()] - 1;
        if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("cycle entry out of range");
        c.img_[a] = b;
      }
      p = c * p;
    }
    return p;
  }

  static Perm transposition(int n, int i, int j) { return from_cycles(n, {{i, j}}); }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  /// 1-based images.
  std::vector<int> images() const {
    std::vector<int> out;
    for (int v : img_) out.push_back(v + 1);
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm p(degree());
    for (int i = 0; i < degree(); ++i) p.img_[img_[i]] = i;
    return p;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw InputError("permutation degree mismatch");
    Perm p(a.degree());
    for (int i = 0; i < a.degree(); ++i) p.img_[i] = a.img_[b.img_[i]];
    return p;
  }

  Perm identity_like() const { return Perm(degree()); }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  /// Disjoint cycle notation, "()" for the identity.
  std::string to_string() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      out += "(";
      int j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ",";
        out += std::to_string(j + 1);
        first = false;
        j = img_[j];
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

private:
  std::vector<int> img_;
};

/// Signed permutation: the matrix with M e_i = signs[i] e_{perm(i)}.
class SignedPerm {
public:
  SignedPerm() = default;
  explicit SignedPerm(int n) : perm_(n), signs_(n, 1) {}
  SignedPerm(Perm p, std::vector<int> signs) : perm_(std::move(p)), signs_(std::move(signs)) {
    if (static_cast<int>(signs_.size()) != perm_.degree()) throw InputError("sign vector length mismatch");
    for (int s : signs_)
      if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
  }

  static SignedPerm identity(int n) { return SignedPerm(n); }
  /// epsilon_i: the sign change of coordinate i (1-based).
  static SignedPerm sign_change(int n, int i) {
    SignedPerm s(n);
    s.signs_.at(i - 1) = -1;
    return s;
  }
  static SignedPerm from_perm(const Perm& p) { return SignedPerm(p, std::vector<int>(p.degree(), 1)); }

  int degree() const { return perm_.degree(); }
  const Perm& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    std::vector<int> s(b.degree());
    for (int i = 0; i < b.degree(); ++i) s[i] = b.signs_[i] * a.signs_[b.perm_(i)];
    return SignedPerm(a.perm_ * b.perm_, std::move(s));
  }

  SignedPerm inverse() const {
    Perm pi = perm_.inverse();
    std::vector<int> s(degree());
    for (int j = 0; j < degree(); ++j) s[j] = signs_[pi(j)];
    return SignedPerm(pi, std::move(s));
  }

  SignedPerm identity_like() const { return SignedPerm(degree()); }
  bool is_identity() const {
    if (!perm_.is_identity()) return false;
    for (int s : signs_)
      if (s != 1) return false;
    return true;
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

  std::string to_string() const {
    std::string out = perm_.to_string() + "[";
    for (int i = 0; i < degree(); ++i) out += (i ? "," : "") + std::string(signs_[i] > 0 ? "+" : "-");
    return out + "]";
  }

private:
  Perm perm_;
  std::vector<int> signs_;
};

}  // namespace confalg
