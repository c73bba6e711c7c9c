#pragma once

#include <cmath>
#include <compare>
#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include "confalg/exactalg/rational.hpp"

namespace confalg {

/// Element a + b*d of Q(d) where d*d = D. Only D = -1 (Gaussian
/// rationals) and D = -3 (Eisenstein field Q(i*sqrt3)) are instantiated.
template <int D>
class QuadExt {
  static_assert(D == -1 || D == -3, "only Q(i) and Q(sqrt -3) are supported");

public:
  static constexpr int kSquare = D;

  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT: Q embeds in Q(d)
  QuadExt(long a) : a_(a) {}             // NOLINT
  QuadExt(int a) : a_(a) {}              // NOLINT
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  /// The generator d itself.
  static QuadExt delta() { return QuadExt(Rational(0), Rational(1)); }

  const Rational& re() const { return a_; }  // rational part
  const Rational& im() const { return b_; }  // coefficient of d

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  QuadExt conj() const { return QuadExt(a_, -b_); }
  Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

  std::complex<double> to_complex() const {
    const double root = std::sqrt(static_cast<double>(-D));
    return {a_.to_double(), b_.to_double() * root};
  }

  static std::string_view field_tag() { return D == -1 ? "Q(i)" : "Q(sqrt-3)"; }

  /// "a", "b*d", "a+b*d", "a-b*d" with rational a, b.
  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string imag = b_.is_one() ? "d" : (b_ == Rational(-1) ? "-d" : b_.to_string() + "*d");
    if (a_.is_zero()) return imag;
    if (imag.front() == '-') return a_.to_string() + imag;
    return a_.to_string() + "+" + imag;
  }

  static QuadExt parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ') s.push_back(c);
    if (s.empty()) throw InputError("empty field literal");
    auto dpos = s.find('d');
    if (dpos == std::string::npos) return QuadExt(Rational::parse(s));
    if (dpos != s.size() - 1) throw InputError("malformed field literal: " + s);
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if (s[i] == '+' || s[i] == '-') {
        split = i;
        break;
      }
    }
    std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string imag_part = split == std::string::npos ? s : s.substr(split);
    imag_part.pop_back();  // the trailing d
    if (!imag_part.empty() && imag_part.back() == '*') imag_part.pop_back();
    Rational b;
    if (imag_part.empty() || imag_part == "+") b = 1;
    else if (imag_part == "-") b = -1;
    else b = Rational::parse(imag_part);
    Rational a = real_part.empty() ? Rational(0) : Rational::parse(real_part);
    return QuadExt(a, b);
  }

  QuadExt operator-() const { return QuadExt(-a_, -b_); }
  QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadExt& operator*=(const QuadExt& o) {
    Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) {
    Rational n = o.norm();
    if (n.is_zero()) throw DomainError("division by zero in " + std::string(field_tag()));
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) = default;

  /// Lexicographic on (a, b); only used for canonical sorting of multisets.
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

private:
  Rational a_;
  Rational b_;
};

using Gaussian = QuadExt<-1>;
using Eisenstein = QuadExt<-3>;

}  // namespace confalg
