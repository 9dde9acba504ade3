#pragma once

#include <string>
#include <vector>

namespace ene {

struct SuiteOptions {
  unsigned seed = 0;
  bool full = false;  // full runs the acceptance-scale instance counts
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string note;  // extra detail worth surfacing (mismatch sizes, caveats)
};

struct SuiteReport {
  std::string suite;
  bool pass = false;
  std::vector<CheckResult> checks;
};

// ring-axioms, ene-axioms, main-formula, hadamard, operators, rational,
// analytic, all
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

// The eleven acceptance checks at their pinned sizes and tolerances,
// 1-based. Each returns instead of throwing: engine exceptions come back as
// pass=false with the message in note.
CheckResult acceptance_check(int index);
int acceptance_check_count();

}  // namespace ene
