#pragma once

#include <cstdint>

#include "wythoff/report.hpp"

// Golden-ratio Beatty sequences A_n = floor(n*phi) and B_n = floor(n*phi^2),
// computed with integers only.

namespace wythoff::beatty {

constexpr std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  // Newton from above: the first iterate not smaller than its predecessor
  // is floor(sqrt(x)).
  std::uint64_t r = x / 2 + 1;
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  for (;;) {
    const std::uint64_t next = (r + x / r) / 2;
    if (next >= r) break;
    r = next;
  }
  while (r * r > x) --r;
  while ((r + 1) <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// Largest index for which 5*n*n fits in 64 bits.
inline constexpr std::uint64_t kMaxIndex = isqrt(UINT64_MAX / 5);

/// floor(n*phi). Throws std::overflow_error for n > kMaxIndex.
std::uint64_t a_n(std::uint64_t n);
/// floor(n*phi^2) == a_n(n) + n.
std::uint64_t b_n(std::uint64_t n);

/// Checks that every integer in [1, bound] is hit exactly once by
/// {A_n} ∪ {B_n}, n >= 1. Throws std::invalid_argument for bound == 0.
Report verify_complementarity(std::uint64_t bound);

}  // namespace wythoff::beatty
