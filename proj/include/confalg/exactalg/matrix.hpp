#pragma once

#include <utility>
#include <vector>

#include "confalg/errors.hpp"
#include "confalg/exactalg/ring.hpp"

namespace confalg {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Fraction-free (Bareiss) determinant with row pivoting. Every division
/// is exact, so this works over MultiPoly as well as over fields.
template <class R>
R determinant_bareiss(Matrix<R> m) {
  using ops = ring_ops<R>;
  const std::size_t n = m.size();
  if (n == 0) return ops::one();
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  bool negate = false;
  R prev = ops::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ops::is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && ops::is_zero(m[p][k])) ++p;
      if (p == n) return ops::zero();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = ops::exact_div(num, prev);
      }
      m[i][k] = ops::zero();
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R(-det) : det;
}

}  // namespace confalg
