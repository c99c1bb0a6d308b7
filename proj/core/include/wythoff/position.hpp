#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <utility>

namespace wythoff {

using Pile = std::uint32_t;

/// Unordered pair of pile sizes, always stored with a <= b.
class Position {
 public:
  constexpr Position() = default;
  constexpr Position(Pile x, Pile y) : a_(x < y ? x : y), b_(x < y ? y : x) {}

  constexpr Pile a() const { return a_; }
  constexpr Pile b() const { return b_; }
  constexpr std::uint64_t tokens() const { return std::uint64_t{a_} + b_; }
  constexpr bool terminal() const { return b_ == 0; }

  friend constexpr auto operator<=>(const Position&, const Position&) = default;

 private:
  Pile a_ = 0;
  Pile b_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
  return os << '(' << p.a() << ',' << p.b() << ')';
}

}  // namespace wythoff
