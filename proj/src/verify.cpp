#include "spinform/verify.hpp"

#include <algorithm>

#include "spinform/character.hpp"
#include "spinform/derham.hpp"
#include "spinform/findim.hpp"
#include "spinform/forms.hpp"

namespace spinform {

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const CaseFailure& f : r.failures)
    failures.push_back(nlohmann::json{{"case", f.case_name}, {"message", f.message}});
  return nlohmann::json{
      {"name", r.name}, {"cases", r.cases}, {"failures", failures}, {"notes", r.notes}};
}

std::vector<SuiteReport> run_verification(int rank, int depth) {
  // sample sizes scale down with the rank so every guardable run stays fast
  int oracle_sum = rank <= 3 ? 3 : (rank <= 5 ? 2 : 1);
  int tensor_sum = rank <= 3 ? 3 : (rank == 4 ? 2 : 1);

  std::vector<SuiteReport> reports;
  reports.push_back(verify_wedge(rank));
  reports.push_back(verify_finite_oracles(rank, oracle_sum, std::min(depth, 10)));
  reports.push_back(verify_spinor_kw(rank, depth));
  reports.push_back(verify_forms_table(rank, std::max(4, depth - 4)));
  if (rank <= 5) reports.push_back(verify_spinor_tensor_identity(rank, tensor_sum, std::max(4, depth - 6)));
  reports.push_back(verify_defining_tensor_identity(rank, std::max(4, depth - 4)));
  reports.push_back(verify_diagram_structure(rank));
  if (rank >= 3 && rank <= 5) reports.push_back(verify_tensor_case_regression(rank));
  reports.push_back(verify_depth_stability(rank, depth));
  return reports;
}

bool all_passed(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
}

nlohmann::json to_json(const std::vector<SuiteReport>& reports, int rank, int depth) {
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteReport& r : reports) suites.push_back(to_json(r));
  return nlohmann::json{
      {"rank", rank}, {"depth", depth}, {"passed", all_passed(reports)}, {"suites", suites}};
}

}  // namespace spinform
