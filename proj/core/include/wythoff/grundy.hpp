#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wythoff/position.hpp"
#include "wythoff/rulesets.hpp"

namespace wythoff {

using NimValue = std::uint32_t;

/// Largest table bound accepted by grundy_table (about 134 MB of values).
inline constexpr Pile kMaxTableBound = 8192;

/// Smallest nonnegative integer not in `vals`.
NimValue mex(std::span<const NimValue> vals);

/// Exact nim-values of every normalized position (a,b) with b <= bound.
///
/// Moves never increase a pile, so the options of a stored position are all
/// stored too and the values equal those of the unbounded game.
///
/// Layout is triangular, grouped by the larger pile: (a,b) lives at
/// b*(b+1)/2 + a. The sweep runs in that order as well; every option of (a,b)
/// has a larger pile below b, or the same larger pile and a smaller a.
class GrundyTable {
 public:
  GrundyTable(RulesetSpec ruleset, Pile bound, std::vector<NimValue> values);

  const RulesetSpec& ruleset() const { return ruleset_; }
  Pile bound() const { return bound_; }

  bool contains(Position p) const { return p.b() <= bound_; }
  /// Throws std::out_of_range outside the bound.
  NimValue at(Position p) const;
  NimValue operator[](Position p) const { return values_[index(p)]; }

  std::size_t size() const { return values_.size(); }
  NimValue max_value() const;

  /// Visits (position, value) in lexicographic (a, b) order.
  template <class Fn>
  void for_each_lex(Fn&& fn) const {
    for (Pile a = 0; a <= bound_; ++a) {
      for (Pile b = a; b <= bound_; ++b) {
        const Position p{a, b};
        fn(p, values_[index(p)]);
      }
    }
  }

  static constexpr std::size_t index(Position p) {
    return std::size_t{p.b()} * (std::size_t{p.b()} + 1) / 2 + p.a();
  }
  static constexpr std::size_t entries(Pile bound) { return index(Position{bound, bound}) + 1; }

  friend bool operator==(const GrundyTable&, const GrundyTable&) = default;

 private:
  RulesetSpec ruleset_;
  Pile bound_;
  std::vector<NimValue> values_;
};

/// Builds the full table. Throws std::length_error if bound > kMaxTableBound.
GrundyTable grundy_table(const RulesetSpec& rs, Pile bound);

enum class GSetSource { engine, formula };

/// Positions sharing one nim-value, lexicographically sorted, all with
/// larger pile <= bound.
struct GSet {
  NimValue g = 0;
  std::vector<Position> positions;
  Pile bound = 0;
  GSetSource source = GSetSource::engine;

  bool contains(Position p) const;
  std::size_t size() const { return positions.size(); }
  bool empty() const { return positions.empty(); }
};

GSet g_set(const GrundyTable& table, NimValue g);
inline GSet p_positions(const GrundyTable& table) { return g_set(table, 0); }

/// Checks the mex definition at every position: the stored value is absent
/// from the options and every smaller value is present. Returns the first
/// violating position in lexicographic order.
std::optional<Position> find_axiom_violation(const GrundyTable& table);

}  // namespace wythoff
