#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace hopf {

struct SuiteOutcome {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  [[nodiscard]] bool ok() const { return passed == total; }
};

/// Runs the reduced-size property suites; one line per suite on `out`.
/// Returns the per-suite outcomes in run order.
std::vector<SuiteOutcome> run_selftest(std::ostream& out, std::size_t samples = 200);

}  // namespace hopf
