#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace vwdg {

/// Verification suites behind `verify --suite`. Each check writes one
/// "PASS <suite>: <detail>" or "FAIL <suite>: <detail>" line.
struct SuiteResult {
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"identities", "burnside", "oracle", "roundtrip"};
  return names;
}

/// `name` is one of suite_names() or "all". Throws std::invalid_argument otherwise.
SuiteResult run_suite(std::string_view name, long max_n, std::ostream &log);

} // namespace vwdg
