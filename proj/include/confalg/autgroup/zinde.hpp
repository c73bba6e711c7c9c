#pragma once

#include "confalg/configspace/vieta.hpp"
#include "confalg/errors.hpp"

namespace confalg {

/// Automorphism Q -> s h_n(Q)^k Q^eps of C^n(C*), eps = +1 or -1.
template <Field F>
struct ZindeAut {
  F s;
  int k = 0;
  int eps = 1;

  friend bool operator==(const ZindeAut&, const ZindeAut&) = default;
};

template <Field F>
ZindeAut<F> make_zinde(const F& s, int k, int eps) {
  if (is_zero(s)) throw DomainError("Zinde automorphism needs s != 0");
  if (eps != 1 && eps != -1) throw InputError("eps must be +1 or -1");
  return {s, k, eps};
}

template <Field F>
Configuration<F> apply_zinde(const ZindeAut<F>& f, const Configuration<F>& q, double tol = 1e-12) {
  const F h = h_n(q, tol);
  const F c = f.s * power(h, f.k);
  Configuration<F> out = q;
  for (auto& p : out.points) p = c * power(p, f.eps);
  return out;
}

/// f after g: (s, k, e) o (s', k', e') = (s s'^e, k + e k', e e').
template <Field F>
ZindeAut<F> compose_zinde(const ZindeAut<F>& f, const ZindeAut<F>& g) {
  return {f.s * power(g.s, f.eps), f.k + f.eps * g.k, f.eps * g.eps};
}

template <Field F>
ZindeAut<F> invert_zinde(const ZindeAut<F>& f) {
  return {power(f.s, -f.eps), -f.eps * f.k, f.eps};
}

}  // namespace confalg
