#pragma once

#include "confalg/errors.hpp"
#include "confalg/exactalg/matrix.hpp"
#include "confalg/exactalg/unipoly.hpp"

namespace confalg {

/// Sylvester matrix of f (degree m) and g (degree k), size (m+k).
template <class R>
Matrix<R> sylvester(const UniPoly<R>& f, const UniPoly<R>& g) {
  const int m = f.degree();
  const int k = g.degree();
  const int size = m + k;
  Matrix<R> s(size, std::vector<R>(size, ring_ops<R>::zero()));
  for (int r = 0; r < k; ++r)
    for (int j = 0; j <= m; ++j) s[r][r + j] = f.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= k; ++j) s[k + r][r + j] = g.coeff(k - j);
  return s;
}

template <class R>
R resultant(const UniPoly<R>& f, const UniPoly<R>& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("resultant of a zero polynomial");
  if (f.degree() < 1 || g.degree() < 1) throw InputError("resultant needs positive degrees");
  return determinant_bareiss(sylvester(f, g));
}

/// Discriminant of a monic polynomial, normalized so that it equals the
/// product of squared root differences: (-1)^{n(n-1)/2} Res(f, f').
template <class R>
R discriminant_univariate(const UniPoly<R>& f) {
  if (f.degree() < 2) throw InputError("discriminant needs degree >= 2");
  if (!f.is_monic()) throw InputError("discriminant expects a monic polynomial");
  const int n = f.degree();
  R r = resultant(f, f.derivative());
  return (n * (n - 1) / 2) % 2 ? R(-r) : r;
}

/// Discriminant of a multivariate polynomial regarded as monic in `var`.
template <Field F>
MultiPoly<F> discriminant_in(const MultiPoly<F>& p, const std::string& var) {
  return discriminant_univariate(as_univariate(p, var));
}

/// The universal discriminant d_n in z_1..z_n.
template <Field F>
MultiPoly<F> universal_discriminant(int n) {
  std::vector<MultiPoly<F>> z;
  for (int i = 1; i <= n; ++i) z.push_back(MultiPoly<F>::variable("z" + std::to_string(i)));
  auto d = discriminant_univariate(UniPoly<MultiPoly<F>>::monic("lambda", z));
  return d.with_vars(MultiPoly<F>::names("z", 1, n));
}

}  // namespace confalg
