#include "resint/budget.hpp"

namespace resint {

namespace {
thread_local const Budget* t_budget = nullptr;
thread_local unsigned t_polls = 0;
}  // namespace

BudgetGuard::BudgetGuard(const Budget& b) : prev_(t_budget), own_(b) { t_budget = &own_; }
BudgetGuard::~BudgetGuard() { t_budget = prev_; }

const Budget* current_budget() { return t_budget; }

void check_deadline() {
  if (!t_budget || !t_budget->deadline) return;
  // reading the clock on every call shows up in profiles
  if ((++t_polls & 63u) != 0) return;
  if (std::chrono::steady_clock::now() > *t_budget->deadline) throw BudgetExceeded("wall time");
}

void check_rank(std::size_t rank, const char* what) {
  if (t_budget && t_budget->max_rank && rank > *t_budget->max_rank)
    throw BudgetExceeded(std::string("rank of ") + what + " is " + std::to_string(rank));
}

}  // namespace resint
