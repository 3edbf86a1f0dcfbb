#pragma once

#include <string>
#include <vector>

namespace sffkit::harness {

struct Check {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
  std::string format() const;
};

// Deterministic suites: saddles, kernel, scba, identities.
VerifyReport run_verify(const std::string& suite);

}  // namespace sffkit::harness
