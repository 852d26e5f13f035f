#pragma once

#include <string>
#include <vector>

#include "andre/eco.hpp"

namespace andre {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int n_max = 10;
  /// Test hook: run the lr rule engine with a broken production.
  LrRulePerturbation perturbation{};
};

/// Runs every structural invariant and engine cross-check up to n_max.
/// Expensive checks cap their own range (membership at 8, witnesses at 7,
/// PDE at 8).
std::vector<PropertyResult> run_property_suite(const VerifyOptions& options);

}  // namespace andre
