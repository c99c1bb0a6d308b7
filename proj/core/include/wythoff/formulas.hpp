#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "wythoff/grundy.hpp"
#include "wythoff/position.hpp"

// Closed-form g-sets of Wythoff's game and its variants. Every generator
// returns the members with larger pile <= bound, sorted lexicographically,
// with source == formula.

namespace wythoff::formulas {

enum class FormulaId {
  p_wythoff,       // {(A_n, B_n)}
  p_wk,            // {(i,i) : i < k} ∪ {(A_n + k, B_n + k)}
  p_wk_recursion,  // {(i,i) : i < l} ∪ (P(W_k) + l)
  p_wk_prime,      // same set as p_wk
  s1_w1,           // {(0,1)} ∪ {(A_n + 2, B_n + 2)}
  s1_wk_shift,     // {(0,1)} ∪ (S1(W_{k-2}) + 2), rooted at S1(W_1); odd k only
  s1_wk_odd,       // {(2i,2i+1) : i <= (k-1)/2} ∪ {(A_n + k+1, B_n + k+1)}
  p_wkl,           // P(W_{k,l}) == P(W_l)
  p_tk,            // {(0,0)} ∪ {(A_n + 1, B_n + 1)}
  s1_tk,           // same set as s1_w1
};

std::string_view to_string(FormulaId id);
/// Accepts the names printed by to_string ("p_wk", "s1_tk", ...).
/// Throws std::invalid_argument.
FormulaId parse_formula_id(std::string_view name);

struct FormulaParams {
  std::uint32_t k = 0;
  std::uint32_t l = 0;
};

/// The nim-value every member of the formula's set has (0 or 1).
NimValue formula_value(FormulaId id);

GSet p_wythoff(Pile bound);
GSet p_wk(std::uint32_t k, Pile bound);
/// Throws std::invalid_argument unless l > 0.
GSet p_wk_recursive(std::uint32_t k, std::uint32_t l, Pile bound);
GSet p_tk(Pile bound);
GSet s1_w1(Pile bound);
/// {(0,1)} ∪ {(a+2, b+2) : (a,b) ∈ base}, truncated to `bound`. `base` must
/// cover at least bound - 2. Throws std::invalid_argument otherwise.
GSet s1_wk_shift(const GSet& base, Pile bound);
/// Throws std::invalid_argument for even k.
GSet s1_wk_odd(std::uint32_t k, Pile bound);
GSet s1_tk(Pile bound);

/// Dispatches to the generator for `id`. Validates params like the
/// generators do; s1_wk_shift and p_wk_recursion take their k (and l) from
/// `params`.
GSet enumerate(FormulaId id, const FormulaParams& params, Pile bound);

/// Membership in the formula's infinite set without enumeration: inverts
/// n = b - a on the shifted Wythoff part and compares with A_n.
bool membership(FormulaId id, const FormulaParams& params, Position p);

}  // namespace wythoff::formulas
