#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octoprime/aut.hpp"
#include "octoprime/budget.hpp"

namespace octoprime::verify {

enum class Verdict
{
  match,
  refuted,
  untested,
  /// computed disagrees with a printed value and an internal cross-check
  /// supports the computed one
  paper_discrepancy,
};

std::string to_string(Verdict v);

enum class Tier
{
  fast,
  slow,
};

std::string to_string(Tier t);
Tier parse_tier(std::string_view text);

struct Record
{
  std::string suite;
  std::string label;
  std::uint32_t p = 0;
  /// autOrder, structure, complete, towerOrder, order, isomorphic, centerOrder,
  /// spectrum, solutions, count, printedTuple
  std::string quantity;
  std::string expected;
  std::string computed;
  /// where the expected value comes from: "<suite>" for a printed value,
  /// "formula:..." for a closed form
  std::string provenance;
  std::optional<Confidence> confidence;
  Verdict verdict = Verdict::untested;
  std::string note;
  double elapsed_ms = 0;
};

struct Options
{
  std::vector<std::uint32_t> primes;
  Tier tier = Tier::fast;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  Budget budget = Budget::from_env();
};

struct Report
{
  std::string suite;
  Options options;
  std::vector<Record> records;

  bool any_refuted() const;
};

std::vector<std::string> const &suite_names();

/// Primes a suite runs at when none are given.
std::vector<std::uint32_t> default_primes(std::string_view suite, Tier tier);

/// Runs one suite; cases are spread over `workers` threads and the records
/// come back in case order. Throws InvalidArgument for an unknown suite or
/// a prime that is not an odd prime.
Report run(std::string_view suite, Options const &options);

std::string to_json(Report const &r, int indent = 2);
std::string to_markdown(Report const &r);
std::string to_csv(Report const &r);

/// AutReport as JSON, with the structure claim it was identified against.
std::string to_json(AutReport const &r, int indent = 2);

} // namespace octoprime::verify
