#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "octoprime/budget.hpp"
#include "octoprime/parallel.hpp"
#include "octoprime/perm_group.hpp"

namespace octoprime {

/// Per-element isomorphism invariant mixing the element order with the class
/// sizes of x, x^2 and x^3. Equal for elements exchanged by an isomorphism.
std::vector<std::uint64_t> element_keys(PermGroup const &g);

/// Greedy generating set as element indices: the element of largest order,
/// then repeatedly the sampled element enlarging the generated subgroup most.
std::vector<std::uint32_t> choose_generators(PermGroup const &g);

/// Generator words of every element, for right multiplication by table walks.
class WordTable
{
public:
  explicit WordTable(ElementTable const &t);

  std::span<std::uint32_t const> word(std::uint32_t i) const noexcept
  {
    return {data_.data() + offset_[i], offset_[i + 1] - offset_[i]};
  }
  /// x * y, walking y's word from x.
  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const noexcept
  {
    for (auto g : word(y))
      x = table_->mul_gen(x, g);
    return x;
  }

private:
  ElementTable const *table_;
  std::vector<std::uint32_t> offset_;
  std::vector<std::uint32_t> data_;
};

/// Backtracking search for isomorphisms src -> dst, choosing images of the
/// generators of src. Homomorphy is decided by extending the generator map
/// along the breadth-first element table of src, so src should be generated
/// by a short generating set (see choose_generators).
class HomSearch
{
public:
  HomSearch(PermGroup const &src, PermGroup const &dst, BudgetMeter &meter);

  std::size_t arity() const noexcept { return gens_.size(); }
  std::vector<std::uint32_t> const &generators() const noexcept { return gens_; }

  /// dst elements with the key of source generator i.
  std::vector<std::uint32_t> const &pool(std::size_t i) const { return pool_[i]; }

  /// Pool elements for generator `prefix.size()` passing the product checks
  /// against the assigned prefix.
  std::vector<std::uint32_t> candidates(std::span<std::uint32_t const> prefix, Exec exec = default_exec()) const;

  /// Element images of the isomorphism with these generator images, or none.
  std::optional<std::vector<std::uint32_t>> check(std::span<std::uint32_t const> images) const;

  /// Generator images of the element images returned by `check`.
  std::vector<std::uint32_t> generator_images(std::vector<std::uint32_t> const &element_images) const;

  /// Completes the prefix by backtracking. `first` restricts the choices for
  /// generator prefix.size() when given.
  std::optional<std::vector<std::uint32_t>> extend(std::vector<std::uint32_t> prefix,
                                                   std::vector<std::uint32_t> const *first = nullptr);

  WordTable const &dst_words() const noexcept { return dst_words_; }
  std::vector<std::uint64_t> const &dst_keys() const noexcept { return dst_keys_; }

private:
  struct PairKeys
  {
    std::uint64_t prod;
    std::uint64_t prod_inv;
    std::uint64_t prod_sq;
  };

  bool partial_check(std::span<std::uint32_t const> images);
  bool compatible(std::size_t i, std::uint32_t y, std::span<std::uint32_t const> prefix) const;
  std::optional<std::vector<std::uint32_t>> dfs(std::vector<std::uint32_t> &images, std::vector<std::uint32_t> const *first);

  PermGroup const &src_;
  PermGroup const &dst_;
  std::vector<std::uint32_t> gens_;
  BudgetMeter &meter_;
  WordTable dst_words_;
  std::vector<std::uint64_t> dst_keys_;
  std::vector<std::vector<std::uint32_t>> pool_;
  /// pair_[i][a] for a < i: keys of g_a g_i, g_a g_i^-1, g_a g_i^2 in src.
  std::vector<std::vector<PairKeys>> pair_;
  std::vector<std::uint32_t> scratch_;
  std::vector<std::uint32_t> touched_;
};

} // namespace octoprime
