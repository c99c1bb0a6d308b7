#include "wythoff/beatty.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace wythoff::beatty {

std::uint64_t a_n(std::uint64_t n) {
  if (n > kMaxIndex) {
    throw std::overflow_error("beatty index " + std::to_string(n) +
                              " exceeds maximum supported index " +
                              std::to_string(kMaxIndex));
  }
  // 5n^2 is never a perfect square for n >= 1, so floor((n + sqrt(5n^2))/2)
  // equals (n + isqrt(5n^2)) / 2.
  return (n + isqrt(5 * n * n)) / 2;
}

std::uint64_t b_n(std::uint64_t n) { return a_n(n) + n; }

Report verify_complementarity(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("complementarity bound must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::uint8_t> hits(bound + 1, 0);
  for (std::uint64_t n = 1;; ++n) {
    const std::uint64_t a = a_n(n);
    if (a > bound) break;
    ++hits[a];
    const std::uint64_t b = a + n;
    if (b <= bound) ++hits[b];
  }

  Report report;
  report.subject = "lemma1";
  report.params = {{"bound", bound}};
  report.bound = bound > UINT32_MAX ? UINT32_MAX : static_cast<std::uint32_t>(bound);
  for (std::uint64_t m = 1; m <= bound; ++m) {
    if (hits[m] != 1) {
      report.status = Status::counterexample;
      report.details = {{"integer", m}, {"cover_count", hits[m]}};
      report.witness = Witness{std::nullopt, Position{0, static_cast<Pile>(m)}, 1, hits[m]};
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace wythoff::beatty
