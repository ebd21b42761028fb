#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "octoprime/modular.hpp"
#include "octoprime/perm_group.hpp"

namespace octoprime::zoo {

enum class GroupName
{
  Cyclic,       // (n)
  ElemAbelian,  // (p, k)
  Dihedral,     // (n), order 2n
  Quaternion8,
  C4xC2,
  C8,
  Sym,          // (n)
  Alt,          // (n)
  GL2,          // (p)
  SL23,
  GL32,
  Hol_C,        // (n)
  Hol_Cp2,      // (p)
  H_pn,         // (p, n), n in {1, 2}
  SL23_at_C,    // (p)
  Coxeter234,   // () abstract, or (p) as 2x2 matrices over GF(p)
  Frobenius56,
  Complete168,
  Complete216,
  Complete432,
};

struct Spec
{
  GroupName name = GroupName::Cyclic;
  std::vector<std::int64_t> params;

  bool operator==(Spec const &) const = default;
};

/// Throws InvalidArgument for bad parameters and NotFound when Coxeter234(p)
/// has no special-form matrix representation at p.
PermGroup make(GroupName name, std::vector<std::int64_t> const &params = {});
PermGroup make(Spec const &spec);

/// Closed-form order; never builds the group.
std::uint64_t order(Spec const &spec);

/// Text token, e.g. "Hol(C_5)", "H(3^2)", "GL(2,7)".
std::string token(Spec const &spec);

/// Accepts the tokens printed by `token` plus short aliases such as "S4",
/// "A4", "D4", "Q2", "Q8", "E8", "C8", "Hol(C_pxC_p)". Throws ParseError.
Spec parse_token(std::string_view text);

/// Generators of the normalizer of the quaternion image
/// <(x,y;y,-x), (0,1;-1,0)> in GL(2,p), order 24(p-1). When p = 1 mod 8 the
/// generators are the matrices a = (0,s;t,0), b = (-1,1;-1,0), c = zI.
std::vector<modular::Mat2> sl23_at_c_matrices(std::uint32_t p);

/// The quaternion image <(x,y;y,-x), (0,1;-1,0)> with x^2 + y^2 = -1, x least.
std::vector<modular::Mat2> quaternion_matrices(std::uint32_t p);

/// Matrix group acting on the p^2 - 1 nonzero row vectors of GF(p)^2.
PermGroup linear_group(std::uint32_t p, std::vector<modular::Mat2> const &gens, std::string name = {});

} // namespace octoprime::zoo
