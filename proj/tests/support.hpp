#pragma once

#include <random>
#include <vector>

#include "homalg/linear_map.hpp"

namespace testing_support {

using homalg::LinearMap;
using homalg::Scalar;

inline Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  return Scalar(num(rng), den(rng));
}

inline LinearMap random_map(std::mt19937& rng, std::size_t cod, std::size_t dom) {
  LinearMap m(cod, dom);
  for (std::size_t r = 0; r < cod; ++r)
    for (std::size_t c = 0; c < dom; ++c) m(r, c) = random_scalar(rng);
  return m;
}

// Determinant by cofactor expansion along the first row.
inline Scalar determinant(const LinearMap& m) {
  const std::size_t n = m.cod();
  if (n == 1) return m(0, 0);
  Scalar det;
  for (std::size_t c = 0; c < n; ++c) {
    LinearMap minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    Scalar term = m(0, c) * determinant(minor);
    det += (c % 2 ? -term : term);
  }
  return det;
}

inline LinearMap adjugate_inverse(const LinearMap& m) {
  const std::size_t n = m.cod();
  const Scalar det = determinant(m);
  LinearMap inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      LinearMap minor(n - 1, n - 1);
      for (std::size_t i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t k = 0, kk = 0; k < n; ++k)
          if (k != c) minor(ii, kk++) = m(i, k);
        ++ii;
      }
      Scalar cof = determinant(minor);
      if ((r + c) % 2) cof = -cof;
      inv(c, r) = cof / det;
    }
  return inv;
}

inline LinearMap random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    LinearMap m = random_map(rng, n, n);
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace testing_support
