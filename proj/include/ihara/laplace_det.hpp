#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ihara/errors.hpp"

namespace ihara {

/// Determinant over an arbitrary commutative ring by Laplace expansion with
/// memoized minors: dp[S] is the signed sum over the first |S| rows using
/// exactly the column set S. No division, so zero divisors are harmless.
/// O(2^n · n) ring multiplications.
template <class Ring>
Ring laplace_determinant(const std::vector<std::vector<Ring>>& m, const Ring& zero,
                         const Ring& one) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  if (n == 0) return one;
  if (n > 24) throw DimensionError("laplace_determinant: matrix too large");

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<Ring> dp(std::size_t{full} + 1, zero);
  std::vector<bool> reached(std::size_t{full} + 1, false);
  dp[0] = one;
  reached[0] = true;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!reached[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < n; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if (mask & bit) continue;
      // Columns already used to the right of `col` are inversions.
      const int inversions = std::popcount(mask & ~((bit << 1) - 1));
      Ring term = dp[mask] * m[row][col];
      if (inversions % 2) term = -term;
      dp[mask | bit] = dp[mask | bit] + term;
      reached[mask | bit] = true;
    }
  }
  return dp[full];
}

}  // namespace ihara
