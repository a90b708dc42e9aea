#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ktheta/integer_matrix.hpp"

namespace oracle {

using ktheta::Integer;
using ktheta::IntegerMatrix;
using ktheta::IntegerVector;

// Laplace expansion; fine for the small sizes used here.
inline Integer det(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Integer term = m(0, c) * det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of all k x k minors (the k-th determinantal divisor).
inline Integer determinantal_divisor(const IntegerMatrix& m, std::size_t k) {
  Integer g = 0;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      IntegerMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      Integer d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}.
inline std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    const Integer dk = determinantal_divisor(m, k);
    if (dk == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

inline IntegerMatrix adjugate(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  IntegerMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      IntegerMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, ii = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, jj = 0; j < n; ++j)
          if (j != c) minor(ii, jj++) = m(i, j);
        ++ii;
      }
      const Integer d = det(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? d : Integer(-d);
    }
  return adj;
}

// v lies in the column span of a non-singular square G iff adj(G) v = 0 mod det G.
inline bool in_full_rank_span(const IntegerMatrix& g, const IntegerVector& v) {
  const Integer d = det(g);
  const IntegerVector w = adjugate(g) * v;
  for (const auto& x : w) {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    if (r != 0) return false;
  }
  return true;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Plain table of a mod-2 form: bit x of the result is q(x). Built by the
// recursion q(x + e_k) = q(x) + q(e_k) + x.e_k, not by the closed form.
inline std::vector<int> form_table(int genus, std::uint64_t basisBits) {
  const std::size_t n = std::size_t{1} << (2 * genus);
  std::vector<int> table(n, 0);
  for (std::size_t x = 1; x < n; ++x) {
    int k = 0;
    while (!((x >> k) & 1U)) ++k;
    const std::size_t rest = x & ~(std::size_t{1} << k);
    // pairing of rest with basis vector k: e_i.f_i = 1 = f_i.e_i mod 2
    const int partner = k < genus ? k + genus : k - genus;
    const int dot = static_cast<int>((rest >> partner) & 1U);
    table[x] = table[rest] ^ static_cast<int>((basisBits >> k) & 1U) ^ dot;
  }
  return table;
}

}  // namespace oracle
