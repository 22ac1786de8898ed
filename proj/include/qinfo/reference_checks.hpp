#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qinfo {

// One named verification row: the measured values and their gates are
// summarized in detail, tolerances pinned in the implementation.
struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Runs the full battery of built-in numerical verifications (closed forms,
// Monte Carlo consistency, geometry identities, inequality suites,
// subsystem spectra, clonability, sequence counting). Deterministic for a
// fixed seed.
std::vector<CheckResult> run_reference_checks(std::uint64_t seed);

}  // namespace qinfo
