#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "octoprime/modular.hpp"
#include "octoprime/parallel.hpp"

namespace octoprime::gl2search {

enum class Form
{
  special_xy,
  general_vxyw,
  order4q_xy,
};

std::string to_string(Form f);

struct Solution
{
  /// (x,y) or (v,x,y,w), entries in [0,p).
  std::vector<std::uint32_t> tuple;
  std::uint64_t matrix_order = 0;
  std::uint64_t group_order = 0;
  bool verified = false;
};

struct SearchResult
{
  std::uint32_t p = 0;
  Form form = Form::special_xy;
  std::vector<Solution> solutions;
  bool exhaustive = true;

  std::size_t count() const noexcept { return solutions.size(); }
  bool contains(std::vector<std::uint32_t> const &tuple) const;
};

/// a = (-1,1;-1,0), the order-3 generator shared by every form.
modular::Mat2 matrix_a(std::uint32_t p);

/// a^3 = b^4 = (a,b^2) = a*b*(a*b^-1)^3 = 1.
bool satisfies_a22(modular::Mat2 const &a, modular::Mat2 const &b);

/// Relators of <2,3,4> x C_q with q = (p-1)/2; p = 7 uses the short form.
bool satisfies_a23(modular::Mat2 const &a, modular::Mat2 const &b);

/// b = (1,x;y,-1) over pairs with x*y = -2, or over all p^2 pairs when
/// `all_pairs` is set.
SearchResult search_special(std::uint32_t p, bool all_pairs = false, Exec exec = default_exec());

/// b = (v,x;y,w) of order 4 with <a,b> of order 48 satisfying A22, in
/// lexicographic (v,x,y,w) order. Stops after `limit` tuples.
SearchResult search_general(std::uint32_t p, std::size_t limit, Exec exec = default_exec());

/// b = (1,x;y,-1) of order 2(p-1) with <a,b> of order 24(p-1).
SearchResult search_order4q(std::uint32_t p, std::size_t limit, Exec exec = default_exec());

/// b^q for a found order-4q pair, as (v,x,y,w). Throws Error if the power
/// does not satisfy A22.
std::array<std::uint32_t, 4> derive_general_from_order4q(std::uint32_t p, std::pair<std::uint32_t, std::uint32_t> xy);

} // namespace octoprime::gl2search
