/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra: rational Gaussian elimination for ranks
 *        and kernels, fraction-free (Bareiss) elimination over the Laurent
 *        ring, and evaluation of Laurent polynomials at rational points.
 */
#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace ischur {

/// x^e for a nonzero rational x and any integer e.
inline Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? x : Rat(1) / x;
  long k = e > 0 ? e : -e;
  Rat out(1);
  while (k > 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

/// Value of f at v = x, exact; x must be nonzero when f has negative degrees.
inline Rat laurent_eval(const Laurent& f, const Rat& x) {
  if (f.is_zero()) return Rat(0);
  Rat out(0);
  for (int e = f.max_deg(); e >= f.min_deg(); --e) out = out * x + Rat(f.coeff(e));
  return out * rat_pow(x, f.min_deg());
}

/// Rank of a dense rational matrix (destructive Gaussian elimination).
inline long rank_rational(std::vector<std::vector<Rat>> M) {
  if (M.empty()) return 0;
  const long rows = static_cast<long>(M.size());
  const long cols = static_cast<long>(M[0].size());
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    const Rat inv = Rat(1) / M[rank][c];
    for (long r = rank + 1; r < rows; ++r) {
      if (M[r][c] == 0) continue;
      const Rat f = M[r][c] * inv;
      for (long j = c; j < cols; ++j) M[r][j] -= f * M[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Rank of a dense Laurent matrix over the fraction field Q(v), computed by
/// fraction-free Bareiss elimination (exact division at every step).
inline long rank_laurent(std::vector<std::vector<Laurent>> M) {
  if (M.empty()) return 0;
  const long rows = static_cast<long>(M.size());
  const long cols = static_cast<long>(M[0].size());
  long rank = 0;
  Laurent prev(1);
  for (long c = 0; c < cols && rank < rows; ++c) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (!M[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    const Laurent p = M[rank][c];
    for (long r = rank + 1; r < rows; ++r) {
      for (long j = c + 1; j < cols; ++j)
        M[r][j] = exact_div(p * M[r][j] - M[r][c] * M[rank][j], prev);
      M[r][c] = Laurent();
    }
    prev = p;
    ++rank;
  }
  return rank;
}

/// Solve M x = b over the rationals; returns an empty vector when the system
/// is inconsistent. M is rows x cols, b has length rows; a particular
/// solution of length cols is returned (free variables set to zero).
inline std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> M,
                                       std::vector<Rat> b) {
  const long rows = static_cast<long>(M.size());
  const long cols = rows ? static_cast<long>(M[0].size()) : 0;
  std::vector<long> pivot_col;
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    std::swap(b[rank], b[piv]);
    const Rat inv = Rat(1) / M[rank][c];
    for (long r = 0; r < rows; ++r) {
      if (r == rank || M[r][c] == 0) continue;
      const Rat f = M[r][c] * inv;
      for (long j = c; j < cols; ++j) M[r][j] -= f * M[rank][j];
      b[r] -= f * b[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (long r = rank; r < rows; ++r)
    if (b[r] != 0) return {};
  std::vector<Rat> x(cols, Rat(0));
  for (long r = 0; r < rank; ++r) x[pivot_col[r]] = b[r] / M[r][pivot_col[r]];
  return x;
}

}  // namespace ischur
