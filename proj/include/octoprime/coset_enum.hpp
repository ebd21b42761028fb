#pragma once

#include <cstdint>
#include <vector>

#include "octoprime/perm.hpp"
#include "octoprime/perm_group.hpp"
#include "octoprime/presentation.hpp"

namespace octoprime {

inline constexpr std::size_t kDefaultMaxCosets = 2000000;

struct CosetEnumeration
{
  std::uint64_t order = 0;
  /// Action of each presentation generator on the cosets of the trivial
  /// subgroup, coset 0 being the subgroup itself. Empty when the order is
  /// larger than a permutation can hold.
  std::vector<Perm> generators;
};

/// HLT coset enumeration over the trivial subgroup. Throws LimitExceeded when
/// more than `max_cosets` rows are defined.
CosetEnumeration enumerate(Presentation const &pres, std::size_t max_cosets = kDefaultMaxCosets);

/// Regular representation as a group; name is left empty.
PermGroup enumerate_group(Presentation const &pres, std::size_t max_cosets = kDefaultMaxCosets);

/// A faithful representation of no larger degree, generator for generator.
PermGroup reduce_degree(PermGroup const &g);

} // namespace octoprime
