#pragma once

#include <vector>

#include "confalg/exactalg/ring.hpp"

namespace confalg {

/// Coefficients z_1..z_n of prod (lambda - q_i), i.e. z_i = (-1)^i sigma_i(q).
template <class R>
std::vector<R> symmetric_expand(const std::vector<R>& roots) {
  // e[k] holds (-1)^k sigma_k of the roots seen so far.
  std::vector<R> e(roots.size() + 1, ring_ops<R>::zero());
  e[0] = ring_ops<R>::one();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] - roots[i] * e[k - 1];
  return std::vector<R>(e.begin() + 1, e.end());
}

}  // namespace confalg
