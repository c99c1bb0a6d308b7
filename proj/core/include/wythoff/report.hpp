#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wythoff/position.hpp"

namespace wythoff {

enum class Status {
  verified,
  consistent_up_to_bound,
  counterexample,
};

std::string_view to_string(Status status);

/// First point of disagreement found by a check.
///
/// `g` is set when the check compared g-sets. `expected` and `actual`
/// describe what each side of the comparison says about `position`.
struct Witness {
  std::optional<std::uint32_t> g;
  Position position;
  nlohmann::json expected;
  nlohmann::json actual;
};

/// Outcome of a verification, conjecture sweep or reference-value check.
///
/// `details` carries check-specific extras (deviation statistics, the list of
/// reproduced values, the soft flag). It is part of the deterministic
/// payload; `elapsed_ms` is not.
struct Report {
  std::string subject;
  nlohmann::json params = nlohmann::json::object();
  std::uint32_t bound = 0;
  Status status = Status::verified;
  std::optional<Witness> witness;
  nlohmann::json details = nlohmann::json::object();
  double elapsed_ms = 0.0;

  bool ok() const { return status != Status::counterexample; }
  /// True when the only failures concern claims that are observations, not results.
  bool paper_soft() const;
};

/// JSON form. With `include_timing == false` the output is a pure function of
/// the inputs that produced the report.
nlohmann::json to_json(const Report& report, bool include_timing = true);
std::string serialize(const Report& report, bool include_timing = true);

/// Throws std::logic_error when status and witness disagree.
void check_consistent(const Report& report);

}  // namespace wythoff
