#pragma once

// Independent reference implementations used only by the tests.

#include <cstdlib>
#include <random>
#include <vector>

#include "k3cover/exactlin.hpp"

namespace oracle {

using k3cover::IntMatrix;
using k3cover::Integer;
using k3cover::IntVector;

inline IntMatrix submatrix(const IntMatrix& a, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
  IntMatrix m(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = a(rs[i], cs[j]);
  return m;
}

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 1; i < n; ++i) rs.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cs.push_back(c);
    const Integer minor = cofactor_det(submatrix(a, rs, cs));
    total += (j % 2 ? -1 : 1) * a(0, j) * minor;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.
inline IntVector determinantal_invariant_factors(const IntMatrix& a) {
  IntVector factors;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rsets, csets;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rsets);
    subsets(a.cols(), k, 0, cur, csets);
    Integer g = 0;
    for (const auto& rs : rsets)
      for (const auto& cs : csets) {
        const Integer m = cofactor_det(submatrix(a, rs, cs));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
      }
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

// Plain row/column reduction to Smith form: pivot on the first nonzero entry
// of the remaining block, clear with remainders until the pivot divides
// everything.
inline IntVector reduction_invariant_factors(IntMatrix a) {
  IntVector out;
  const std::size_t R = a.rows(), C = a.cols();
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    std::size_t pr = R, pc = C;
    for (std::size_t i = t; i < R && pr == R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == R) break;
    a.swap_rows(t, pr);
    a.swap_cols(t, pc);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) {
          a.swap_rows(i, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) {
          a.swap_cols(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < R && !fixed; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace oracle
