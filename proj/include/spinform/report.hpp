// Result containers for the verification suites.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace spinform {

struct CaseFailure {
  std::string case_name;
  std::string message;
};

struct SuiteReport {
  std::string name;
  int cases = 0;
  std::vector<CaseFailure> failures;
  // Documented divergences between transcribed reference data and the
  // computation, which is authoritative.
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  std::optional<std::string> first_failure() const {
    if (failures.empty()) return std::nullopt;
    return failures.front().case_name + ": " + failures.front().message;
  }
  void fail(std::string case_name, std::string message) {
    failures.push_back({std::move(case_name), std::move(message)});
  }
};

nlohmann::json to_json(const SuiteReport& r);

}  // namespace spinform
