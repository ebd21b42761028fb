#pragma once

#include <chrono>
#include <cstdint>

namespace octoprime {

/// Node and wall-clock bound for a backtracking search.
struct Budget
{
  std::uint64_t max_nodes = 100000000;
  std::uint64_t max_ms = 300000;

  /// Defaults, with max_ms taken from OCTOPRIME_BUDGET_MS when set.
  static Budget from_env();
};

/// Running counter against a Budget. Throws BudgetExceeded from `tick`.
class BudgetMeter
{
public:
  explicit BudgetMeter(Budget b);

  void tick(std::uint64_t nodes = 1);
  std::uint64_t nodes() const noexcept { return nodes_; }
  double elapsed_ms() const;

private:
  Budget budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t next_clock_check_ = 0;
  std::chrono::steady_clock::time_point start_;
};

} // namespace octoprime
