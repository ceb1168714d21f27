#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hmap/rational.hpp"

namespace hmap {

/// Division-free determinant by Laplace expansion along rows with
/// memoized column-subset minors (2^n states, not n! paths).  Works
/// over any exact ring type with +, -, *: Poly, TruncatedSeries,
/// Rational.  Intended for the small matrices this project builds
/// (spectral-curve determinants, Sylvester matrices); n is capped to
/// keep the state table honest.
template <typename T>
T fraction_free_det(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n > 20) throw AlgebraError("fraction_free_det: matrix too large");
  for (const auto& row : m)
    if (row.size() != n) throw AlgebraError("fraction_free_det: matrix not square");

  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  std::vector<std::optional<T>> memo(static_cast<std::size_t>(full) + 1);

  // det over rows r..n-1 and the columns present in `mask`;
  // r == n - popcount(mask).
  auto rec = [&](auto&& self, std::uint32_t mask) -> const T& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    if (mask == 0) {
      slot = one;
      return *slot;
    }
    const std::size_t r = n - static_cast<std::size_t>(__builtin_popcount(mask));
    T acc = zero;
    int parity = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const T& sub = self(self, mask & ~(1u << c));
      T contrib = m[r][c] * sub;
      acc = (parity % 2 == 0) ? acc + contrib : acc - contrib;
      ++parity;
    }
    slot = std::move(acc);
    return *slot;
  };
  return rec(rec, full);
}

}  // namespace hmap
