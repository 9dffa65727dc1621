#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppreal {

/// Outcome of one verification suite. `failures` holds one reproducer line
/// per failing case; the suite passed iff it is empty.
struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  double wall_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// Unset fields take each suite's own default size.
struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> samples;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

/// Every suite, in acceptance order.
const std::vector<SuiteInfo>& suites();

/// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace ppreal
