#include "octoprime/budget.hpp"

#include <cstdlib>
#include <string>

#include "octoprime/errors.hpp"

namespace octoprime {

Budget Budget::from_env()
{
  Budget b;
  if (char const *env = std::getenv("OCTOPRIME_BUDGET_MS")) {
    try {
      b.max_ms = std::stoull(env);
    } catch (std::exception const &) {
      throw InvalidArgument(std::string("OCTOPRIME_BUDGET_MS is not a number: ") + env);
    }
  }
  return b;
}

BudgetMeter::BudgetMeter(Budget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

void BudgetMeter::tick(std::uint64_t nodes)
{
  nodes_ += nodes;
  if (nodes_ > budget_.max_nodes)
    throw BudgetExceeded("search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
  if (nodes_ >= next_clock_check_) {
    next_clock_check_ = nodes_ + 1024;
    if (elapsed_ms() > static_cast<double>(budget_.max_ms))
      throw BudgetExceeded("search exceeded " + std::to_string(budget_.max_ms) + " ms");
  }
}

double BudgetMeter::elapsed_ms() const
{
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
}

} // namespace octoprime
