#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dlite/oracle.hpp"

namespace dlite::cli {

/// Deliberate corruption used to prove the harness can fail.
enum class Fault {
  kNone,
  kRawDlDistance,  // triangle property checks DL itself instead of its cube root
};

struct VerifyConfig {
  std::int64_t trials = 10'000;
  std::uint64_t seed = 42;
  oracle::DimRange dims{2, 10};
  Fault fault = Fault::kNone;
};

struct PropertyResult {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  double worst = 0.0;  // largest deviation seen, in the property's own units
};

struct VerifyReport {
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// Runs every randomized property with `trials` cases each (the quadrature
/// and closed-form checks use at most 200 and 2000 cases). Throws UsageError
/// for trials < 1 or a dimension range outside 2 <= lo <= hi.
VerifyReport run_verify(const VerifyConfig& cfg);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace dlite::cli
