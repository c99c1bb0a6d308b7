#include "wythoff/formulas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "wythoff/beatty.hpp"

namespace wythoff::formulas {

namespace {

constexpr std::array<std::pair<FormulaId, std::string_view>, 10> kNames{{
    {FormulaId::p_wythoff, "p_wythoff"},
    {FormulaId::p_wk, "p_wk"},
    {FormulaId::p_wk_recursion, "p_wk_recursion"},
    {FormulaId::p_wk_prime, "p_wkprime"},
    {FormulaId::s1_w1, "s1_w1"},
    {FormulaId::s1_wk_shift, "s1_wk_shift"},
    {FormulaId::s1_wk_odd, "s1_wk_odd"},
    {FormulaId::p_wkl, "p_wkl"},
    {FormulaId::p_tk, "p_tk"},
    {FormulaId::s1_tk, "s1_tk"},
}};

GSet empty_set(NimValue g, Pile bound) {
  GSet s;
  s.g = g;
  s.bound = bound;
  s.source = GSetSource::formula;
  return s;
}

// (A_n + offset, B_n + offset) for n >= 0 while B_n + offset <= bound.
void append_shifted_wythoff(GSet& out, std::uint64_t offset) {
  for (std::uint64_t n = 0;; ++n) {
    const std::uint64_t a = beatty::a_n(n) + offset;
    const std::uint64_t b = a + n;
    if (b > out.bound) {
      // B_n is increasing, so nothing later fits either.
      break;
    }
    out.positions.emplace_back(static_cast<Pile>(a), static_cast<Pile>(b));
  }
}

void finish(GSet& s) {
  std::sort(s.positions.begin(), s.positions.end());
  s.positions.erase(std::unique(s.positions.begin(), s.positions.end()), s.positions.end());
}

bool in_shifted_wythoff(Position p, std::uint64_t offset) {
  if (p.a() < offset) return false;
  const std::uint64_t n = p.b() - p.a();
  return beatty::a_n(n) == p.a() - offset;
}

void require_odd(std::uint32_t k) {
  if (k % 2 == 0) {
    throw std::invalid_argument("odd k required (got k=" + std::to_string(k) + ")");
  }
}

void require_positive_shift(std::uint32_t l) {
  if (l == 0) throw std::invalid_argument("recursive P-position form requires l > 0");
}

}  // namespace

std::string_view to_string(FormulaId id) {
  for (const auto& [fid, name] : kNames) {
    if (fid == id) return name;
  }
  return "?";
}

FormulaId parse_formula_id(std::string_view name) {
  for (const auto& [fid, known] : kNames) {
    if (known == name) return fid;
  }
  std::string all;
  for (const auto& [fid, known] : kNames) {
    if (!all.empty()) all += ", ";
    all += known;
  }
  throw std::invalid_argument("unknown formula '" + std::string(name) + "' (expected one of " +
                              all + ")");
}

NimValue formula_value(FormulaId id) {
  switch (id) {
    case FormulaId::s1_w1:
    case FormulaId::s1_wk_shift:
    case FormulaId::s1_wk_odd:
    case FormulaId::s1_tk:
      return 1;
    default:
      return 0;
  }
}

GSet p_wythoff(Pile bound) { return p_wk(0, bound); }

GSet p_wk(std::uint32_t k, Pile bound) {
  GSet s = empty_set(0, bound);
  for (Pile i = 0; i < k && i <= bound; ++i) s.positions.emplace_back(i, i);
  append_shifted_wythoff(s, k);
  finish(s);
  return s;
}

GSet p_wk_recursive(std::uint32_t k, std::uint32_t l, Pile bound) {
  require_positive_shift(l);
  GSet s = empty_set(0, bound);
  for (Pile i = 0; i < l && i <= bound; ++i) s.positions.emplace_back(i, i);
  if (bound >= l) {
    for (Position p : p_wk(k, bound - l).positions) s.positions.emplace_back(p.a() + l, p.b() + l);
  }
  finish(s);
  return s;
}

GSet p_tk(Pile bound) {
  GSet s = empty_set(0, bound);
  s.positions.emplace_back(0, 0);
  append_shifted_wythoff(s, 1);
  finish(s);
  return s;
}

GSet s1_w1(Pile bound) {
  GSet s = empty_set(1, bound);
  if (bound >= 1) s.positions.emplace_back(0, 1);
  append_shifted_wythoff(s, 2);
  finish(s);
  return s;
}

GSet s1_wk_shift(const GSet& base, Pile bound) {
  if (bound >= 2 && base.bound < bound - 2) {
    throw std::invalid_argument("shift base covers bound " + std::to_string(base.bound) +
                                ", need at least " + std::to_string(bound - 2));
  }
  GSet s = empty_set(1, bound);
  if (bound >= 1) s.positions.emplace_back(0, 1);
  for (Position p : base.positions) {
    if (std::uint64_t{p.b()} + 2 <= bound) s.positions.emplace_back(p.a() + 2, p.b() + 2);
  }
  finish(s);
  return s;
}

GSet s1_wk_odd(std::uint32_t k, Pile bound) {
  require_odd(k);
  GSet s = empty_set(1, bound);
  const std::uint32_t half = (k - 1) / 2;
  for (std::uint64_t i = 0; i <= half && 2 * i + 1 <= bound; ++i) {
    s.positions.emplace_back(static_cast<Pile>(2 * i), static_cast<Pile>(2 * i + 1));
  }
  append_shifted_wythoff(s, std::uint64_t{k} + 1);
  finish(s);
  return s;
}

GSet s1_tk(Pile bound) { return s1_w1(bound); }

GSet enumerate(FormulaId id, const FormulaParams& params, Pile bound) {
  switch (id) {
    case FormulaId::p_wythoff: return p_wythoff(bound);
    case FormulaId::p_wk:
    case FormulaId::p_wk_prime: return p_wk(params.k, bound);
    case FormulaId::p_wk_recursion: return p_wk_recursive(params.k, params.l, bound);
    case FormulaId::s1_w1: return s1_w1(bound);
    case FormulaId::s1_wk_shift: {
      require_odd(params.k);
      if (params.k == 1) return s1_w1(bound);
      const Pile below = bound >= 2 ? bound - 2 : 0;
      return s1_wk_shift(enumerate(id, {params.k - 2, 0}, below), bound);
    }
    case FormulaId::s1_wk_odd: return s1_wk_odd(params.k, bound);
    case FormulaId::p_wkl:
      if (params.k > params.l) throw std::invalid_argument("W_{k,l} requires k <= l");
      return p_wk(params.l, bound);
    case FormulaId::p_tk: return p_tk(bound);
    case FormulaId::s1_tk: return s1_tk(bound);
  }
  throw std::invalid_argument("unknown formula id");
}

bool membership(FormulaId id, const FormulaParams& params, Position p) {
  const Pile a = p.a();
  const Pile b = p.b();
  switch (id) {
    case FormulaId::p_wythoff:
      return in_shifted_wythoff(p, 0);
    case FormulaId::p_wk:
    case FormulaId::p_wk_prime:
      return (a == b && a < params.k) || in_shifted_wythoff(p, params.k);
    case FormulaId::p_wk_recursion:
      require_positive_shift(params.l);
      if (a == b && a < params.l) return true;
      return a >= params.l &&
             membership(FormulaId::p_wk, {params.k, 0}, Position{a - params.l, b - params.l});
    case FormulaId::s1_w1:
    case FormulaId::s1_tk:
      return (a == 0 && b == 1) || in_shifted_wythoff(p, 2);
    case FormulaId::s1_wk_shift:
      require_odd(params.k);
      if (params.k == 1) return membership(FormulaId::s1_w1, {}, p);
      if (a == 0 && b == 1) return true;
      return a >= 2 && membership(id, {params.k - 2, 0}, Position{a - 2, b - 2});
    case FormulaId::s1_wk_odd:
      require_odd(params.k);
      if (b == a + 1 && a % 2 == 0 && a / 2 <= (params.k - 1) / 2) return true;
      return in_shifted_wythoff(p, std::uint64_t{params.k} + 1);
    case FormulaId::p_wkl:
      if (params.k > params.l) throw std::invalid_argument("W_{k,l} requires k <= l");
      return membership(FormulaId::p_wk, {params.l, 0}, p);
    case FormulaId::p_tk:
      return (a == 0 && b == 0) || in_shifted_wythoff(p, 1);
  }
  return false;
}

}  // namespace wythoff::formulas
