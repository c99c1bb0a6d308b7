#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "wythoff/grundy.hpp"
#include "wythoff/report.hpp"
#include "wythoff/table_io.hpp"

namespace wythoff::verify {

inline constexpr Pile kDefaultTheoremBound = 200;
inline constexpr Pile kDefaultConjectureBound = 100;

enum class TheoremId {
  thm2,  // P(Wythoff) = {(A_n, B_n)}
  thm3,  // P(W_k)
  thm4,  // P(W'_k) = P(W_k)
  thm5,  // S1(W_1)
  thm6,  // S1(W_{k+2}) = {(0,1)} ∪ (S1(W_k) + 2)
  cor1,  // P(W_{k+l}) = {(i,i) : i < l} ∪ (P(W_k) + l)
  cor2,  // S1(W_k), k odd
  thm7,  // P(W_{k,l}) = P(W_l)
  thm8,  // P(T_k)
  thm9,  // S1(T_k)
  cor3,  // P(W_1) = P(T_k)
};

enum class ConjectureId {
  c1,   // S^g(W_{k,l}) = S^g(W_{k',l}) for g <= l - k'
  c2a,  // S^g(T_k) = S^g(T_inf) for g <= k
  c2b,  // S^g(W_1) = S^g(T_k) for g <= k
  c3,   // S^g(T_k) = S^g(T_l) for g <= min(k, l)
};

std::string_view to_string(TheoremId id);
std::string_view to_string(ConjectureId id);
/// Throws std::invalid_argument for unknown names.
TheoremId parse_theorem_id(std::string_view name);
ConjectureId parse_conjecture_id(std::string_view name);

/// Parameters shared by theorem and conjecture checks. `k_infinite` selects
/// T_inf in place of T_k where a T game is involved.
struct Params {
  std::uint32_t k = 0;
  std::uint32_t k_prime = 0;
  std::uint32_t l = 0;
  bool k_infinite = false;
};

/// Engine g-set(s) against the closed form (or the second game's engine
/// g-set) at `bound`; reports the first lexicographic discrepancy.
/// Throws std::invalid_argument when params do not fit the theorem.
Report verify_theorem(TableStore& store, TheoremId id, const Params& params,
                      Pile bound = kDefaultTheoremBound);

/// Compares the two games' g-sets for every g in the conjecture's range.
/// Never reports more than consistent-up-to-bound. A witness with g <= 1
/// inside C2/C3 (and g == 0 inside C1) contradicts a proven theorem and is
/// marked `details.proven_subcase`.
Report explore_conjecture(TableStore& store, ConjectureId id, const Params& params,
                          Pile bound = kDefaultConjectureBound);

/// g(20,30) in W_1, T_1 and T_38 against 38, 2 and 38. The T_38 value is an
/// observation, not a theorem: a mismatch there alone sets
/// `details.paper_soft`.
Report check_paper_values(TableStore& store);

/// Nim-value-1 sequences of W_{k,l} and W_l, paired index-wise in
/// lexicographic order; verified iff the largest |a_n - a'_n| + |b_n - b'_n|
/// is at most 1. Requires k < l, l odd. Any failure is soft.
Report closeness_check(TableStore& store, std::uint32_t k, std::uint32_t l,
                       Pile bound = kDefaultConjectureBound);

/// Set equality S1(W_{k,l}) = S1(W_l) for even l, k < l. Soft.
Report coincidence_check(TableStore& store, std::uint32_t k, std::uint32_t l,
                         Pile bound = kDefaultConjectureBound);

/// First lexicographic position whose membership in the g-sets of the two
/// tables differs. Throws std::invalid_argument when bounds differ.
std::optional<Position> compare_gsets(const GrundyTable& t1, const GrundyTable& t2, NimValue g);

/// First lexicographic position in exactly one of the two sets.
std::optional<Position> first_difference(const GSet& lhs, const GSet& rhs);

}  // namespace wythoff::verify
