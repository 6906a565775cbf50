#pragma once

#include "pbclass/zlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using pbclass::zlinalg::Integer;
using pbclass::zlinalg::IntMatrix;
using pbclass::zlinalg::Vector;

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                               long lo = -20, long hi = 20) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

inline Vector random_vector(std::mt19937& rng, std::size_t n, long lo = -20, long hi = 20) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Vector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

// Cofactor expansion; independent of the Bareiss routine in zlinalg.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void combinations(std::size_t n, std::size_t k,
                         std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1} where
// D_k is the gcd of all k x k minors. Zeros fill up to min(rows, cols).
inline Vector invariant_factors_by_minors(const IntMatrix& m) {
  const std::size_t t = std::min(m.rows(), m.cols());
  Vector out;
  Integer prev = 1;
  bool zero = false;
  for (std::size_t k = 1; k <= t; ++k) {
    if (zero) {
      out.push_back(0);
      continue;
    }
    std::vector<std::vector<std::size_t>> rs, cs;
    combinations(m.rows(), k, rs);
    combinations(m.cols(), k, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
        Integer d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) {
      zero = true;
      out.push_back(0);
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

} // namespace testsupport
