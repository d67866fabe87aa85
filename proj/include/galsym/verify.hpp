#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galsym {

struct SuiteReport {
  std::string suite;
  int passed = 0;
  int failed = 0;
  /// One line per failed trial.
  std::vector<std::string> failures;
};

/// group-laws, additivity, kervaire-roundtrip, integrality, wu.
const std::vector<std::string>& suite_names();

/// Runs `trials` seeded trials of a named property suite. Throws
/// std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, int trials);

}  // namespace galsym
