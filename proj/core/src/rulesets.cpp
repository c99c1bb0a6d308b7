#include "wythoff/rulesets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wythoff {

RulesetSpec RulesetSpec::wkl(std::uint32_t k, std::uint32_t l) {
  if (k > l) {
    throw std::invalid_argument("W_{k,l} requires k <= l (got k=" + std::to_string(k) +
                                ", l=" + std::to_string(l) + ")");
  }
  return {Family::wkl, k, l};
}

RulesetSpec RulesetSpec::parse(std::string_view family, std::uint32_t k, std::uint32_t l) {
  if (family == "wythoff") return wythoff();
  if (family == "wk") return wk(k);
  if (family == "wkprime") return wk_prime(k);
  if (family == "wkl") return wkl(k, l);
  if (family == "tk") return tk(k);
  if (family == "tinf") return t_infinity();
  throw std::invalid_argument("unknown ruleset family '" + std::string(family) +
                              "' (expected wythoff, wk, wkprime, wkl, tk or tinf)");
}

std::string_view RulesetSpec::family_name() const {
  switch (family_) {
    case Family::wythoff: return "wythoff";
    case Family::wk: return "wk";
    case Family::wk_prime: return "wkprime";
    case Family::wkl: return "wkl";
    case Family::tk: return "tk";
    case Family::t_infinity: return "tinf";
  }
  return "?";
}

std::string RulesetSpec::display() const {
  const std::string k = std::to_string(k_);
  switch (family_) {
    case Family::wythoff: return "Wythoff";
    case Family::wk: return "W_" + k;
    case Family::wk_prime: return "W'_" + k;
    case Family::wkl: return "W_{" + k + "," + std::to_string(l_) + "}";
    case Family::tk: return "T_" + k;
    case Family::t_infinity: return "T_inf";
  }
  return "?";
}

std::string RulesetSpec::diagonal_rule() const {
  const std::string k = std::to_string(k_);
  switch (family_) {
    case Family::wythoff:
      return "remove the same positive number of tokens from both piles";
    case Family::wk:
      return "a diagonal move must leave both piles with at least " + k + " tokens";
    case Family::wk_prime:
      return "a diagonal move must not lead to (i,i) with i < " + k;
    case Family::wkl:
      return "a diagonal move must lead to (i,j) with min(i,j) >= " + k +
             " and max(i,j) >= " + std::to_string(l_);
    case Family::tk:
      return "a diagonal move from (a,b), a <= b, removing s must keep a-s > 0 and "
             "|floor((b-s)/(a-s)) - floor(b/a)| <= " + k;
    case Family::t_infinity:
      return "a diagonal move must not empty a pile";
  }
  return "?";
}

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::nim_first: return "nim-first";
    case MoveKind::nim_second: return "nim-second";
    case MoveKind::diagonal: return "diagonal";
  }
  return "?";
}

bool diagonal_allowed(const RulesetSpec& rs, Position p, Pile s) {
  const Pile a = p.a();
  const Pile b = p.b();
  if (s == 0 || s > a) return false;
  switch (rs.family()) {
    case Family::wythoff:
      return true;
    case Family::wk:
      return a - s >= rs.k();
    case Family::wk_prime:
      return !(a == b && a - s < rs.k());
    case Family::wkl:
      return a - s >= rs.k() && b - s >= rs.l();
    case Family::tk: {
      if (s >= a) return false;
      const std::uint64_t before = b / a;
      const std::uint64_t after = (b - s) / (a - s);
      // (b-s)/(a-s) >= b/a whenever a <= b, so the difference is nonnegative.
      return after - before <= rs.k();
    }
    case Family::t_infinity:
      return s < a;
  }
  return false;
}

std::vector<Position> moves(const RulesetSpec& rs, Position p) {
  std::vector<Position> out;
  out.reserve(std::size_t{p.a()} * 2 + p.b());
  for_each_move(rs, p, [&](const Move& m) { out.push_back(m.target); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Move> all_moves(const RulesetSpec& rs, Position p) {
  std::vector<Move> out;
  for_each_move(rs, p, [&](const Move& m) { out.push_back(m); });
  return out;
}

std::vector<std::pair<Pile, Position>> diagonal_moves(const RulesetSpec& rs, Position p) {
  std::vector<std::pair<Pile, Position>> out;
  for (Pile s = 1; s <= p.a(); ++s) {
    if (diagonal_allowed(rs, p, s)) out.emplace_back(s, Position{p.a() - s, p.b() - s});
  }
  return out;
}

bool is_legal(const RulesetSpec& rs, Position from, Position to) {
  const Pile a = from.a();
  const Pile b = from.b();
  // Normalized nim targets: (a',b) with a' < a; (a,b') with a <= b' < b;
  // (b',a) with b' < a.
  if (to.b() == b && to.a() < a) return true;
  if (to.a() == a && to.b() < b) return true;
  if (to.b() == a && to.a() < a) return true;
  if (to.b() - to.a() == b - a && to.a() < a) {
    return diagonal_allowed(rs, from, from.a() - to.a());
  }
  return false;
}

std::optional<std::string> illegal_reason(const RulesetSpec& rs, Position from, Position to) {
  if (is_legal(rs, from, to)) return std::nullopt;
  std::ostringstream os;
  if (to.tokens() >= from.tokens()) {
    os << "a move must remove at least one token";
  } else if (to.b() - to.a() == from.b() - from.a() && to.a() < from.a()) {
    os << rs.display() << ": " << rs.diagonal_rule();
  } else {
    os << "a move removes tokens from a single pile, or the same number from both piles";
  }
  return os.str();
}

}  // namespace wythoff
