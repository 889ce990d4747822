#pragma once

// The thirteen end-to-end acceptance checks, shared by the acceptance binary
// and the `report` command.

#include "json.hpp"

#include <string>
#include <vector>

namespace burnside {

inline constexpr unsigned kCriteriaCount = 13;

struct CriterionResult {
  unsigned id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs criterion `id` (1..13); exceptions inside a check become a failure
/// with the message as detail. Throws std::out_of_range for a bad id.
CriterionResult run_criterion(unsigned id);
std::vector<CriterionResult> run_acceptance();

/// "PASS  3 representations: ... (0.52 s)"
std::string format_line(const CriterionResult& result);
nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results);

}  // namespace burnside
