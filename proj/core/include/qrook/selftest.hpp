#pragma once

#include <string>
#include <vector>

namespace qrook {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure reason when !pass
};

struct SelfTestReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Executable invariant suites of every module.  quick runs in seconds
/// (symbolic identities, 2x2/3x3 oracles); full takes minutes and adds the
/// exhaustive S_5/S_6 cross-engine and board-vs-permutation agreements.
SelfTestReport selftest(bool full);

}  // namespace qrook
