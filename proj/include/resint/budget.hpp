#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace resint {

/// Raised when the calling thread's budget runs out.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limits polled by the long-running loops of the calling thread.
struct Budget {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Largest rank allowed for a syzygy module in a resolution frame.
  std::optional<std::size_t> max_rank;
};

/// Installs a budget on this thread for the lifetime of the guard.
class BudgetGuard {
 public:
  explicit BudgetGuard(const Budget& b);
  ~BudgetGuard();
  BudgetGuard(const BudgetGuard&) = delete;
  BudgetGuard& operator=(const BudgetGuard&) = delete;

 private:
  const Budget* prev_;
  Budget own_;
};

/// The budget of this thread; null when unlimited.
const Budget* current_budget();

/// Throws BudgetExceeded past the deadline. Cheap enough for inner loops.
void check_deadline();
void check_rank(std::size_t rank, const char* what);

}  // namespace resint
