#pragma once

#include <string>
#include <vector>

#include "aisr/term.hpp"

namespace aisr {

struct CheckResult {
  std::string check;
  std::string subject;
  bool pass = false;
  std::string detail;
};

struct BatteryOptions {
  int n = 3;
  int max_catalog_order = 4;
  unsigned workers = 1;
};

struct BatteryReport {
  std::vector<CheckResult> results;
  int failures = 0;
};

// The full verification battery at exponent n: every structural claim the
// library ships is exercised on the built-in flat extensions whose group
// exponent divides n-1 and on the complete catalog of M_n members of small
// order. Subjects are independent; with workers > 1 they are checked in
// parallel and reported in a fixed order.
BatteryReport run_battery(const BatteryOptions& options);

}  // namespace aisr
