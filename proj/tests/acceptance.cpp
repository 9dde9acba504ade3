// Runs the eleven acceptance checks at their pinned sizes and prints one
// verdict line each; exits nonzero when any of them fails.
#include <cstdio>
#include <sstream>
#include <string>

#include "ene/verify.hpp"

int main() {
  int failures = 0;
  for (int i = 1; i <= ene::acceptance_check_count(); ++i) {
    ene::CheckResult r = ene::acceptance_check(i);
    std::printf("criterion %02d %s: %s\n", i, r.name.c_str(), r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) {
      std::istringstream lines(r.note);
      std::string line;
      while (std::getline(lines, line)) std::printf("    %s\n", line.c_str());
    }
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  if (failures) std::printf("%d of %d criteria failed\n", failures, ene::acceptance_check_count());
  return failures ? 1 : 0;
}
