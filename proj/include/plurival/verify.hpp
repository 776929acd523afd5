#ifndef PLURIVAL_VERIFY_HPP
#define PLURIVAL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace plurival {

// One verification suite: a named batch of exact checks with the structural
// identity it certifies.
struct SuiteResult {
  std::string name;       // e.g. "valuation"
  std::string anchor;     // identity tag reported by the CLI, e.g. "coro:main2"
  bool passed = false;
  long checks = 0;        // individual assertions run
  long failures = 0;
  double elapsed_ms = 0;
  double limit_ms = 0;    // runtime budget for the suite
  std::string detail;     // first failure description, empty when green
};

// Registered suite names in execution order.
std::vector<std::string> verify_suite_names();

// Runs one suite (seed drives fixture generation; workers only affects the
// stochastic suites).
SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed, int workers);

// Runs every suite.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int workers);

}  // namespace plurival

#endif  // PLURIVAL_VERIFY_HPP
