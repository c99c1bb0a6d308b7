#include "wythoff/report.hpp"

#include <stdexcept>

namespace wythoff {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::verified: return "verified";
    case Status::consistent_up_to_bound: return "consistent-up-to-bound";
    case Status::counterexample: return "counterexample";
  }
  return "unknown";
}

bool Report::paper_soft() const {
  auto it = details.find("paper_soft");
  return status == Status::counterexample && it != details.end() && it->is_boolean() &&
         it->get<bool>();
}

nlohmann::json to_json(const Report& report, bool include_timing) {
  nlohmann::json out = nlohmann::json::object();
  out["subject"] = report.subject;
  out["params"] = report.params;
  out["bound"] = report.bound;
  out["status"] = std::string(to_string(report.status));
  if (report.witness) {
    const Witness& w = *report.witness;
    nlohmann::json wj = nlohmann::json::object();
    if (w.g) wj["g"] = *w.g;
    wj["position"] = {w.position.a(), w.position.b()};
    wj["expected"] = w.expected;
    wj["actual"] = w.actual;
    out["witness"] = std::move(wj);
  }
  if (!report.details.empty()) out["details"] = report.details;
  if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::string serialize(const Report& report, bool include_timing) {
  return to_json(report, include_timing).dump();
}

void check_consistent(const Report& report) {
  const bool failed = report.status == Status::counterexample;
  if (failed != report.witness.has_value()) {
    throw std::logic_error("report '" + report.subject +
                           "': witness must be present exactly when status is counterexample");
  }
}

}  // namespace wythoff
