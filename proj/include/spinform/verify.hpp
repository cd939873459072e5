// Aggregation of every verification suite for one rank.
#pragma once

#include <vector>

#include "spinform/report.hpp"

namespace spinform {

// Runs all suites that apply at this rank, in a fixed order. Independent cases
// inside the suites may run concurrently; the report order never changes.
std::vector<SuiteReport> run_verification(int rank, int depth);

bool all_passed(const std::vector<SuiteReport>& reports);

nlohmann::json to_json(const std::vector<SuiteReport>& reports, int rank, int depth);

}  // namespace spinform
