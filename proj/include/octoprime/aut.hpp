#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octoprime/budget.hpp"
#include "octoprime/claim.hpp"
#include "octoprime/perm_group.hpp"

namespace octoprime {

enum class Confidence
{
  refuted,
  order_only,
  profile_consistent,
  isomorphism_verified,
};

std::string to_string(Confidence c);

struct AutReport
{
  std::string group;
  std::uint64_t order = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t inner_order = 0;
  bool complete = false;
  /// Images of the generators below under sampled automorphisms (capped).
  std::vector<Perm> generators;
  std::vector<std::vector<Perm>> sampled;
  std::optional<std::string> identified_as;
  std::optional<Confidence> confidence;
  double elapsed_ms = 0;
};

struct AutOptions
{
  Budget budget = Budget::from_env();
  /// Generating set to search over; chosen greedily when empty.
  std::vector<Perm> generators;
  /// Seeds the choice of inner automorphisms used to pre-merge orbits.
  std::uint64_t seed = 1;
  std::size_t max_sampled = 16;
};

/// Aut(G) computed once: a generating set of G and a strong generating set
/// of Aut(G) for it, as element image arrays over the table of `group`.
struct AutComputation
{
  PermGroup group;
  std::uint64_t aut_order = 0;
  std::vector<std::vector<std::uint32_t>> automorphisms;
  double elapsed_ms = 0;
};

AutComputation compute_automorphisms(PermGroup const &g, AutOptions const &opts = {});

/// complete is decided by |Z(G)| = 1 and |Aut(G)| = |G|, plus an explicit
/// isomorphism Aut(G) ~ G when |G| is within the iso threshold.
AutReport count_automorphisms(PermGroup const &g, AutOptions const &opts = {});

bool is_complete(PermGroup const &g, AutOptions const &opts = {});

/// Aut(G) acting on the union of the Aut-orbits of a generating set of G,
/// degree-reduced. Throws LimitExceeded past the aut-realization cap.
PermGroup aut_as_group(PermGroup const &g, AutOptions const &opts = {});
PermGroup aut_as_group(AutComputation const &c);

struct TowerEntry
{
  std::uint64_t order = 0;
  std::uint64_t aut_order = 0;
  bool complete = false;
};

struct TowerResult
{
  std::vector<TowerEntry> entries;
  /// Set when a cap stopped the tower early; holds the reason.
  std::optional<std::string> stopped;
};

/// G, Aut(G), Aut(Aut(G)), ... until a complete group or `steps` steps.
TowerResult tower_step(PermGroup const &g, std::size_t steps, AutOptions const &opts = {});

struct Identification
{
  Confidence confidence = Confidence::refuted;
  std::string detail;
};

/// Compares g with the claim: orders, then invariant profiles, then an
/// explicit isomorphism when both orders are within the iso threshold.
Identification identify(PermGroup const &g, StructureClaim const &claim, Budget budget = Budget::from_env());

/// For groups known only by order.
Identification identify_order(std::uint64_t order, StructureClaim const &claim);

} // namespace octoprime
