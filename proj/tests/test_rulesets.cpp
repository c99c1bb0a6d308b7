#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "wythoff/rulesets.hpp"

using namespace wythoff;

namespace {

using Diagonal = std::vector<std::pair<Pile, Position>>;

std::vector<RulesetSpec> sample_rulesets() {
  std::vector<RulesetSpec> out{RulesetSpec::wythoff(), RulesetSpec::t_infinity()};
  for (std::uint32_t k = 0; k <= 4; ++k) {
    out.push_back(RulesetSpec::wk(k));
    out.push_back(RulesetSpec::wk_prime(k));
    out.push_back(RulesetSpec::tk(k));
    for (std::uint32_t l = k; l <= 5; ++l) out.push_back(RulesetSpec::wkl(k, l));
  }
  out.push_back(RulesetSpec::tk(38));
  return out;
}

bool subset(const std::vector<Position>& small, const std::vector<Position>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Position> targets(const Diagonal& d) {
  std::vector<Position> out;
  for (const auto& [s, p] : d) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("diagonal options from (5,10) in T_k for k = 0..4") {
  const Position start{5, 10};
  CHECK(diagonal_moves(RulesetSpec::tk(0), start) == Diagonal{{1, {4, 9}}, {2, {3, 8}}});
  for (std::uint32_t k : {1u, 2u, 3u}) {
    CHECK(diagonal_moves(RulesetSpec::tk(k), start) ==
          Diagonal{{1, {4, 9}}, {2, {3, 8}}, {3, {2, 7}}});
  }
  CHECK(diagonal_moves(RulesetSpec::tk(4), start) ==
        Diagonal{{1, {4, 9}}, {2, {3, 8}}, {3, {2, 7}}, {4, {1, 6}}});
}

TEST_CASE("terminal position has no options in any family") {
  for (const auto& rs : sample_rulesets()) CHECK(moves(rs, Position{0, 0}).empty());
}

TEST_CASE("diagonal examples") {
  CHECK(targets(diagonal_moves(RulesetSpec::wk(3), {6, 9})) ==
        std::vector<Position>{{5, 8}, {4, 7}, {3, 6}});
  CHECK(diagonal_moves(RulesetSpec::t_infinity(), {1, 1}).empty());
  CHECK(diagonal_moves(RulesetSpec::wk(0), {3, 3}) ==
        Diagonal{{1, {2, 2}}, {2, {1, 1}}, {3, {0, 0}}});

  const auto wkl = moves(RulesetSpec::wkl(3, 5), {6, 9});
  CHECK(std::binary_search(wkl.begin(), wkl.end(), Position{3, 6}));
  CHECK_FALSE(std::binary_search(wkl.begin(), wkl.end(), Position{2, 5}));
}

TEST_CASE("is_legal examples") {
  CHECK(is_legal(RulesetSpec::wkl(3, 5), {6, 9}, {3, 6}));
  CHECK_FALSE(is_legal(RulesetSpec::wkl(3, 5), {6, 9}, {2, 5}));
  for (const auto& rs : sample_rulesets()) CHECK_FALSE(is_legal(rs, {4, 4}, {4, 4}));

  auto reason = illegal_reason(RulesetSpec::wkl(3, 5), {6, 9}, {2, 5});
  REQUIRE(reason.has_value());
  CHECK(reason->find("min(i,j) >= 3") != std::string::npos);
  CHECK_FALSE(illegal_reason(RulesetSpec::wkl(3, 5), {6, 9}, {3, 6}).has_value());
}

TEST_CASE("diagonal move to (0, b-a)") {
  const Position p{3, 7};
  const Position bottom{0, 4};
  CHECK(is_legal(RulesetSpec::wythoff(), p, bottom));
  CHECK(is_legal(RulesetSpec::wk(0), p, bottom));
  CHECK(is_legal(RulesetSpec::wk_prime(2), p, bottom));
  CHECK_FALSE(is_legal(RulesetSpec::wk(1), p, bottom));
  CHECK_FALSE(is_legal(RulesetSpec::tk(100), p, bottom));
  CHECK_FALSE(is_legal(RulesetSpec::t_infinity(), p, bottom));
  // W'_k only forbids landing on the diagonal below k
  CHECK_FALSE(is_legal(RulesetSpec::wk_prime(2), {3, 3}, {1, 1}));
  CHECK(is_legal(RulesetSpec::wk_prime(2), {3, 3}, {2, 2}));
}

TEST_CASE("ruleset construction") {
  CHECK_THROWS_AS(RulesetSpec::wkl(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(RulesetSpec::parse("wkl", 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(RulesetSpec::parse("nim", 0, 0), std::invalid_argument);
  CHECK(RulesetSpec::parse("tinf", 7, 9) == RulesetSpec::t_infinity());
  CHECK(RulesetSpec::wkl(3, 5).display() == "W_{3,5}");
  CHECK(RulesetSpec::tk(2).family_name() == "tk");
}

TEST_CASE("normalization") {
  CHECK(Position{9, 6} == Position{6, 9});
  CHECK(Position{9, 6}.a() == 6);
  for (const auto& rs : sample_rulesets()) CHECK(moves(rs, {9, 6}) == moves(rs, {6, 9}));
}

TEST_CASE("move sets agree with the rule oracle for every pair up to 20") {
  constexpr Pile n = 20;
  for (const auto& rs : sample_rulesets()) {
    for (Pile b = 0; b <= n; ++b) {
      for (Pile a = 0; a <= b; ++a) {
        const auto opts = moves(rs, {a, b});
        std::vector<Position> expected;
        for (Pile d = 0; d <= b; ++d) {
          for (Pile c = 0; c <= d; ++c) {
            if (c + d < a + b && oracle::legal(rs, a, b, c, d)) expected.emplace_back(c, d);
          }
        }
        std::sort(expected.begin(), expected.end());
        REQUIRE_MESSAGE(opts == expected, rs.display() << " at " << Position{a, b});
        for (Pile d = 0; d <= b; ++d) {
          for (Pile c = 0; c <= d; ++c) {
            const bool in = std::binary_search(opts.begin(), opts.end(), Position{c, d});
            REQUIRE(is_legal(rs, {a, b}, {c, d}) == in);
          }
        }
      }
    }
  }
}

TEST_CASE("structural properties up to 60") {
  constexpr Pile n = 60;
  for (const auto& rs : sample_rulesets()) {
    for (Pile b = 0; b <= n; ++b) {
      for (Pile a = 0; a <= b; ++a) {
        const Position p{a, b};
        std::size_t nim = 0;
        for (const Move& m : all_moves(rs, p)) {
          REQUIRE(m.amount >= 1);
          REQUIRE(m.target.tokens() < p.tokens());
          if (m.kind == MoveKind::diagonal) {
            REQUIRE(m.target.b() - m.target.a() == b - a);
          } else {
            ++nim;
          }
        }
        REQUIRE(nim == std::size_t{a} + b);
        const auto opts = moves(rs, p);
        const std::size_t diag = diagonal_moves(rs, p).size();
        // From (a,a) both piles reach the same a nim targets, and the diagonal
        // move by b - a lands on (2a - b, a), which a nim move also reaches.
        const bool overlap = b > a && diagonal_allowed(rs, p, b - a);
        REQUIRE(opts.size() == std::size_t{a} + b - (a == b ? a : 0) + diag - overlap);
      }
    }
  }
}

TEST_CASE("lattice of rule sets and identities up to 60") {
  constexpr Pile n = 60;
  const auto wythoff = RulesetSpec::wythoff();
  const auto tinf = RulesetSpec::t_infinity();
  for (Pile b = 0; b <= n; ++b) {
    for (Pile a = 0; a <= b; ++a) {
      const Position p{a, b};
      const auto all = moves(wythoff, p);
      REQUIRE(moves(RulesetSpec::wk(0), p) == all);
      const auto t_inf = moves(tinf, p);
      REQUIRE(subset(t_inf, all));
      REQUIRE(t_inf == moves(RulesetSpec::wk(1), p));
      for (std::uint32_t k = 0; k <= 8; ++k) {
        const auto wk = moves(RulesetSpec::wk(k), p);
        REQUIRE(subset(moves(RulesetSpec::wk(k + 1), p), wk));
        REQUIRE(subset(wk, moves(RulesetSpec::wk_prime(k), p)));
        REQUIRE(subset(moves(RulesetSpec::wk_prime(k), p), all));
        REQUIRE(subset(moves(RulesetSpec::tk(k), p), moves(RulesetSpec::tk(k + 1), p)));
        REQUIRE(subset(moves(RulesetSpec::tk(k + 1), p), t_inf));
        REQUIRE(moves(RulesetSpec::wkl(k, k), p) == wk);
      }
    }
  }
}
