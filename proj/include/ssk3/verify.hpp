#pragma once

#include <string>
#include <vector>

#include "ssk3/common.hpp"

namespace ssk3::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // e.g. "zero_count=105"
};

struct SuiteReport {
  std::string suite;
  std::string params;
  std::vector<CheckResult> checks;

  bool pass() const;
};

SuiteReport verify_fields(u64 p, unsigned d, u64 samples, u64 seed);
SuiteReport verify_discform(u64 p, unsigned sigma);
SuiteReport verify_charspace(u64 p, unsigned sigma, bool quick);
SuiteReport verify_oracle(u64 p, unsigned sigma);
SuiteReport verify_lattices();
SuiteReport verify_arith();

/// The standard battery over small parameters; quick trims sample counts.
std::vector<SuiteReport> verify_all(bool quick);

}  // namespace ssk3::verify
