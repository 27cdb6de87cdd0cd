#pragma once

#include <functional>
#include <string>
#include <vector>

namespace motivic {

struct CheckResult {
  int id = 0;  // 1..12 for the acceptance criteria, 0 for supplementary checks
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

enum class Suite { All, Identities, Oracle };

Suite parse_suite(const std::string& name);

/// Acceptance criteria 1..12.
int acceptance_count();
CheckResult run_acceptance(int id);

/// Criteria in the suite plus supplementary structural checks, in order.
/// on_result is called after each check.
std::vector<CheckResult> run_suite(Suite suite, const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace motivic
