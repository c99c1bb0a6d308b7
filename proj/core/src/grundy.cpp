#include "wythoff/grundy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wythoff {

NimValue mex(std::span<const NimValue> vals) {
  std::vector<bool> seen(vals.size() + 1, false);
  for (NimValue v : vals) {
    if (v < seen.size()) seen[v] = true;
  }
  NimValue m = 0;
  while (seen[m]) ++m;
  return m;
}

GrundyTable::GrundyTable(RulesetSpec ruleset, Pile bound, std::vector<NimValue> values)
    : ruleset_(ruleset), bound_(bound), values_(std::move(values)) {
  if (values_.size() != entries(bound_)) {
    throw std::invalid_argument("grundy table for bound " + std::to_string(bound_) + " needs " +
                                std::to_string(entries(bound_)) + " values, got " +
                                std::to_string(values_.size()));
  }
}

NimValue GrundyTable::at(Position p) const {
  if (!contains(p)) {
    std::string msg = "position (" + std::to_string(p.a()) + "," + std::to_string(p.b()) +
                      ") is outside table bound " + std::to_string(bound_);
    throw std::out_of_range(msg);
  }
  return values_[index(p)];
}

NimValue GrundyTable::max_value() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

GrundyTable grundy_table(const RulesetSpec& rs, Pile bound) {
  if (bound > kMaxTableBound) {
    throw std::length_error("table bound " + std::to_string(bound) + " exceeds the limit of " +
                            std::to_string(kMaxTableBound));
  }
  std::vector<NimValue> values(GrundyTable::entries(bound));

  // seen[v] == stamp means value v occurs among the current options. Values
  // never exceed the option count (at most 3*bound), so v > 3*bound + 1 can
  // be ignored.
  const std::size_t limit = std::size_t{bound} * 3 + 2;
  std::vector<std::uint32_t> seen(limit, 0);
  std::uint32_t stamp = 0;

  for (Pile b = 0; b <= bound; ++b) {
    for (Pile a = 0; a <= b; ++a) {
      const Position p{a, b};
      ++stamp;
      for_each_move(rs, p, [&](const Move& m) {
        const NimValue v = values[GrundyTable::index(m.target)];
        if (v < limit) seen[v] = stamp;
      });
      NimValue m = 0;
      while (seen[m] == stamp) ++m;
      values[GrundyTable::index(p)] = m;
    }
  }
  return GrundyTable(rs, bound, std::move(values));
}

bool GSet::contains(Position p) const {
  return std::binary_search(positions.begin(), positions.end(), p);
}

GSet g_set(const GrundyTable& table, NimValue g) {
  GSet out;
  out.g = g;
  out.bound = table.bound();
  out.source = GSetSource::engine;
  table.for_each_lex([&](Position p, NimValue v) {
    if (v == g) out.positions.push_back(p);
  });
  return out;
}

std::optional<Position> find_axiom_violation(const GrundyTable& table) {
  std::optional<Position> bad;
  // seen[u] == stamp marks value u among the options of the current position
  std::vector<std::uint32_t> seen(std::size_t{3} * table.bound() + 2, 0);
  std::uint32_t stamp = 0;
  table.for_each_lex([&](Position p, NimValue v) {
    if (bad) return;
    ++stamp;
    for_each_move(table.ruleset(), p, [&](const Move& m) {
      const NimValue u = table[m.target];
      if (u < seen.size()) seen[u] = stamp;
    });
    bool ok = v < seen.size() && seen[v] != stamp;
    for (NimValue u = 0; u < v && ok; ++u) ok = seen[u] == stamp;
    if (!ok) bad = p;
  });
  return bad;
}

}  // namespace wythoff
