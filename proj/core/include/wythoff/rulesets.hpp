#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wythoff/position.hpp"

namespace wythoff {

enum class Family {
  wythoff,
  wk,
  wk_prime,
  wkl,
  tk,
  t_infinity,
};

/// Selects one rule family and its parameters.
///
/// Construct through the named factories; they enforce k <= l for W_{k,l}.
/// Parameters a family does not use are zero.
class RulesetSpec {
 public:
  static RulesetSpec wythoff() { return {Family::wythoff, 0, 0}; }
  static RulesetSpec wk(std::uint32_t k) { return {Family::wk, k, 0}; }
  static RulesetSpec wk_prime(std::uint32_t k) { return {Family::wk_prime, k, 0}; }
  static RulesetSpec wkl(std::uint32_t k, std::uint32_t l);
  static RulesetSpec tk(std::uint32_t k) { return {Family::tk, k, 0}; }
  static RulesetSpec t_infinity() { return {Family::t_infinity, 0, 0}; }

  /// Builds a spec from a family name ("wythoff", "wk", "wkprime", "wkl",
  /// "tk", "tinf") and parameters. Throws std::invalid_argument.
  static RulesetSpec parse(std::string_view family, std::uint32_t k, std::uint32_t l);

  Family family() const { return family_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t l() const { return l_; }

  /// Short machine name, e.g. "wkl"; stable, used in cache files.
  std::string_view family_name() const;
  /// Human-readable, e.g. "W_{3,5}" or "T_inf".
  std::string display() const;
  /// One-line statement of the diagonal-move rule.
  std::string diagonal_rule() const;

  friend bool operator==(const RulesetSpec&, const RulesetSpec&) = default;
  friend auto operator<=>(const RulesetSpec&, const RulesetSpec&) = default;

 private:
  RulesetSpec(Family f, std::uint32_t k, std::uint32_t l) : family_(f), k_(k), l_(l) {}

  Family family_;
  std::uint32_t k_;
  std::uint32_t l_;
};

enum class MoveKind {
  nim_first,   // takes from the smaller pile
  nim_second,  // takes from the larger pile
  diagonal,
};

std::string_view to_string(MoveKind kind);

struct Move {
  MoveKind kind;
  Pile amount;
  Position target;

  friend bool operator==(const Move&, const Move&) = default;
};

/// True when removing `s` tokens from both piles of `p` is allowed.
bool diagonal_allowed(const RulesetSpec& rs, Position p, Pile s);

/// Calls `fn(Move)` for every legal move. Nim moves from (a,a) reach the same
/// target from either pile; both are reported. Diagonal moves come last,
/// ascending in amount.
template <class Fn>
void for_each_move(const RulesetSpec& rs, Position p, Fn&& fn) {
  const Pile a = p.a();
  const Pile b = p.b();
  for (Pile s = 1; s <= a; ++s) fn(Move{MoveKind::nim_first, s, Position{a - s, b}});
  for (Pile s = 1; s <= b; ++s) fn(Move{MoveKind::nim_second, s, Position{a, b - s}});
  for (Pile s = 1; s <= a; ++s) {
    if (diagonal_allowed(rs, p, s)) fn(Move{MoveKind::diagonal, s, Position{a - s, b - s}});
  }
}

/// Deduplicated option set, sorted lexicographically.
std::vector<Position> moves(const RulesetSpec& rs, Position p);

/// Every legal move with its kind and amount, without deduplication.
std::vector<Move> all_moves(const RulesetSpec& rs, Position p);

/// Diagonal options only, ascending in amount.
std::vector<std::pair<Pile, Position>> diagonal_moves(const RulesetSpec& rs, Position p);

bool is_legal(const RulesetSpec& rs, Position from, Position to);

/// Why `from -> to` is illegal, or nullopt if it is legal.
std::optional<std::string> illegal_reason(const RulesetSpec& rs, Position from, Position to);

}  // namespace wythoff
