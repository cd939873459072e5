// Acceptance suite: one check per numbered criterion, each printed as a
// single pass/fail line with its runtime. Exits nonzero if any criterion
// fails. Everything is exact arithmetic; the only tolerances are the stated
// truncation depths and runtime budgets.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "spinform/character.hpp"
#include "spinform/derham.hpp"
#include "spinform/findim.hpp"
#include "spinform/forms.hpp"
#include "spinform/verify.hpp"

using namespace spinform;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> deferred_notes;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (seconds > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("runtime ") + std::to_string(seconds) +
              " s exceeds budget " + std::to_string(budget_seconds) + " s";
  }
  if (!ok) ++failures;
  std::printf("%s  criterion %d: %s  (%.2f s)\n", ok ? "PASS" : "FAIL", number, title.c_str(), seconds);
  if (!ok && !detail.empty()) std::printf("      %s\n", detail.c_str());
}

bool suites_pass(const std::vector<SuiteReport>& reports, std::string& detail) {
  for (const SuiteReport& r : reports) {
    for (const std::string& note : r.notes) deferred_notes.push_back(r.name + ": " + note);
    if (!r.passed()) {
      detail = r.name + ": " + *r.first_failure();
      return false;
    }
  }
  return true;
}

Weight label_weight(std::vector<int> f2) {
  std::vector<HalfInt> f(f2.size());
  for (size_t k = 0; k < f2.size(); ++k) f[k] = HalfInt::from_twice(f2[k]);
  return Weight::from_fundamental(f);
}

}  // namespace

int main() {
  criterion(1, "wedge powers: dimensions and characters, ranks 2..6", 30.0, [](std::string& detail) {
    std::vector<SuiteReport> reports;
    for (int l = 2; l <= 6; ++l) reports.push_back(verify_wedge(l));
    return suites_pass(reports, detail);
  });

  criterion(2, "finite oracles agree to depth 10 (coordinate sum <= 3, ranks 2..3)", 30.0,
            [](std::string& detail) {
              std::vector<SuiteReport> reports;
              for (int l : {2, 3}) reports.push_back(verify_finite_oracles(l, 3, 10));
              return suites_pass(reports, detail);
            });

  criterion(3, "character formula reproduces both spinor enumerations to depth 12, ranks 2..4", 60.0,
            [](std::string& detail) {
              std::vector<SuiteReport> reports;
              for (int l : {2, 3, 4}) reports.push_back(verify_spinor_kw(l, 12));
              return suites_pass(reports, detail);
            });

  criterion(4, "spinor tensor identity to depth 6 (coordinate sum <= 3, ranks 2..3)", 120.0,
            [](std::string& detail) {
              std::vector<SuiteReport> reports;
              for (int l : {2, 3}) reports.push_back(verify_spinor_tensor_identity(l, 3, 6));
              return suites_pass(reports, detail);
            });

  criterion(5, "reference rank-3 table reproduced; closed-form labels match to rank 5", 30.0,
            [](std::string& detail) {
              std::vector<SuiteReport> reports{verify_forms_table(3, 6)};
              if (!suites_pass(reports, detail)) return false;
              for (int l = 2; l <= 5; ++l)
                for (int i = 0; i <= 2 * l; ++i) {
                  std::set<Weight> rule, computed;
                  for (int j = 0; j <= std::min(i, 2 * l - i); ++j) rule.insert(node_label(l, {i, j}).hw);
                  for (const auto& [lab, m] : forms_spinor_decomposition(l, i).summands) computed.insert(lab.hw);
                  if (rule != computed) {
                    detail = "label rule disagrees at rank " + std::to_string(l) + ", degree " + std::to_string(i);
                    return false;
                  }
                }
              return true;
            });

  criterion(6, "defining tensor identity to depth 8 over both label tables", 120.0, [](std::string& detail) {
    std::vector<SuiteReport> reports;
    for (int l : {2, 3}) reports.push_back(verify_defining_tensor_identity(l, 8));
    return suites_pass(reports, detail);
  });

  criterion(7, "rank-3 diagram edge for edge; window containment exhaustive, ranks 2..5", 60.0,
            [](std::string& detail) {
              std::vector<SuiteReport> reports;
              for (int l : {2, 3, 4, 5}) reports.push_back(verify_diagram_structure(l));
              return suites_pass(reports, detail);
            });

  criterion(8, "eleven reference cases reproduced at ranks 3..4, divergences reported", 60.0,
            [](std::string& detail) {
              std::vector<SuiteReport> reports;
              for (int l : {3, 4, 5}) reports.push_back(verify_tensor_case_regression(l));
              if (!suites_pass(reports, detail)) return false;
              // resolving the transcribed lists must actually have been needed
              bool reported = false;
              for (const std::string& n : deferred_notes) reported |= n.find("overruled") != std::string::npos;
              if (!reported) detail = "expected the known transcription divergences to be reported";
              return reported;
            });

  criterion(9, "depth stability: +2 depth changes nothing inside the window", 60.0, [](std::string& detail) {
    std::vector<SuiteReport> reports;
    for (int l : {2, 3}) reports.push_back(verify_depth_stability(l, 10));
    if (!suites_pass(reports, detail)) return false;

    // a full product pipeline re-run two levels deeper
    for (int l : {2, 3}) {
      Character finite = freudenthal_multiplicities(Weight::fundamental(l, 1));
      auto lhs_at = [&](int depth) {
        // the defining module spreads 2l-1 height levels below its top
        return mul(finite, spinor_character(l, Parity::even, depth + 2 * l - 1), depth);
      };
      if (!equal_to_depth(lhs_at(6), lhs_at(8), 6)) {
        detail = "product pipeline drifted at rank " + std::to_string(l);
        return false;
      }
      Weight sample = label_weight([&] {
        std::vector<int> f2(static_cast<size_t>(l), 0);
        f2[0] = 2;
        f2[static_cast<size_t>(l) - 1] = -1;
        return f2;
      }());
      if (!equal_to_depth(kac_wakimoto_character(sample, 8), kac_wakimoto_character(sample, 10), 8)) {
        detail = "character formula drifted at rank " + std::to_string(l);
        return false;
      }
    }
    return true;
  });

  if (!deferred_notes.empty()) {
    std::printf("\ndivergences from the transcribed reference lists (computation is authoritative):\n");
    for (const std::string& n : deferred_notes) std::printf("  - %s\n", n.c_str());
  }

  std::printf("\n%s\n", failures == 0 ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
