#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symrank {

/// Raised when an exhaustive sweep would exceed its configured budget.
/// The CLI maps this to exit status 3.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what_space, std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error(what_space + " needs " + std::to_string(needed) +
                           " items, budget is " + std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}

  /// Saturates at UINT64_MAX when the true count does not fit.
  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

/// A code construction produced something other than what it promises
/// (e.g. a basis that became dependent).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symrank
