#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "octoprime/budget.hpp"
#include "octoprime/perm_group.hpp"

namespace octoprime {

struct InvariantProfile
{
  std::uint64_t order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  /// Prime-power cyclic factors of G/[G,G], ascending.
  std::vector<std::uint64_t> abelianization;
  /// element order -> number of elements
  std::map<std::uint64_t, std::uint64_t> spectrum;
  /// element order -> class sizes, ascending
  std::map<std::uint64_t, std::vector<std::uint64_t>> class_sizes;

  bool operator==(InvariantProfile const &) const = default;
};

InvariantProfile profile(PermGroup const &g);

/// Decides a ~ b. Throws BudgetExceeded when the search runs out, which
/// leaves the answer unknown.
bool is_isomorphic(PermGroup const &a, PermGroup const &b, Budget budget = Budget::from_env());

/// The same search without the profile prefilter; used to cross-check it.
bool is_isomorphic_by_search(PermGroup const &a, PermGroup const &b, Budget budget = Budget::from_env());

/// Rebuilds g on a short generating set (choose_generators) for searching.
PermGroup on_short_generators(PermGroup const &g);

} // namespace octoprime
