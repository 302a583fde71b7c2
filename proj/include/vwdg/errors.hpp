#pragma once

#include <stdexcept>
#include <string>

namespace vwdg {

/// A search refused (or aborted) because it would exceed its size budget.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string &what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  /// Estimated (or partial) size of the search that was refused.
  double estimate() const { return estimate_; }

private:
  double estimate_;
};

} // namespace vwdg
