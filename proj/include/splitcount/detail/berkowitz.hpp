#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace splitcount::detail {

/// Division-free characteristic polynomial (Berkowitz). `a` is row-major
/// n x n; the result has n+1 coefficients, lowest degree first, and equals
/// det(xI - A). Only ring operations on T are used, so it runs unchanged
/// on big integers, checked 64-bit integers, and residues mod p^k.
template <class T>
std::vector<T> berkowitz(std::span<const T> a, std::size_t n, const T &zero,
                         const T &one) {
  auto at = [&](std::size_t i, std::size_t j) -> const T & {
    return a[i * n + j];
  };
  // Highest degree first while building.
  std::vector<T> poly{one};
  std::vector<T> t;
  std::vector<T> vec;
  std::vector<T> next;
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t m = r - 1; // index of the new row/column
    t.assign(r + 1, zero);
    t[0] = one;
    t[1] = zero - at(m, m);
    // vec = A_{m} ^ k * C, starting from C = column m restricted to rows < m.
    vec.assign(m, zero);
    for (std::size_t i = 0; i < m; ++i)
      vec[i] = at(i, m);
    for (std::size_t k = 2; k <= r; ++k) {
      T dot = zero;
      for (std::size_t j = 0; j < m; ++j)
        dot = dot + at(m, j) * vec[j];
      t[k] = zero - dot;
      if (k == r)
        break;
      next.assign(m, zero);
      for (std::size_t i = 0; i < m; ++i) {
        T acc = zero;
        for (std::size_t j = 0; j < m; ++j)
          acc = acc + at(i, j) * vec[j];
        next[i] = acc;
      }
      vec.swap(next);
    }
    // poly <- Toeplitz(t) * poly, (r+1) x r lower triangular.
    std::vector<T> out(r + 1, zero);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j)
        out[i] = out[i] + t[i - j] * poly[j];
    poly.swap(out);
  }
  return {poly.rbegin(), poly.rend()};
}

} // namespace splitcount::detail
