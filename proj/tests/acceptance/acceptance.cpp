// SPDX-License-Identifier: Apache-2.0
// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <exception>

#include "bpl/suite.hpp"

int main() {
  const bpl::SuiteOptions opt;
  int failed = 0;
  for (int i = 1; i <= bpl::kCriterionCount; ++i) {
    try {
      const bpl::CriterionResult r = bpl::run_criterion(i, opt);
      std::printf("%-5s %s  %s: %s (%.2f s)\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.title.c_str(),
                  r.detail.c_str(), r.seconds);
      failed += !r.pass;
    } catch (const std::exception& e) {
      std::printf("AC%-3d FAIL  raised: %s\n", i, e.what());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", bpl::kCriterionCount - failed, bpl::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
