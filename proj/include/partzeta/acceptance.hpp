#pragma once

#include <string>
#include <vector>

namespace pz {

struct CriterionResult {
  std::string id;     // "1" .. "17", with 12a/12b/12c
  std::string title;
  bool pass = false;
  std::string detail; // measured quantities, or the exception text
  double seconds = 0;
};

std::vector<std::string> acceptance_ids();

/// Runs the acceptance criteria at 256-bit precision with tolerance 2^-200.
/// `only` restricts the run to the listed ids (a bare "12" selects 12a-12c).
std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& only = {});

/// "PASS  7  shuffle ... | detail"
std::string format_result(const CriterionResult& r);

}  // namespace pz
