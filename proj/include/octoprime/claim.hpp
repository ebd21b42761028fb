#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octoprime/modular.hpp"
#include "octoprime/perm_group.hpp"
#include "octoprime/presentation.hpp"
#include "octoprime/zoo.hpp"

namespace octoprime {

/// A group structure written as a composition tree over zoo groups, e.g.
/// Hol(C_p) wr C_2 or Hol(C_p) x C_{p-1} x D_4.
struct StructureClaim
{
  enum class Kind
  {
    zoo,
    product,
    wreath_c2,
    /// (C_p x C_p) @ <action>, the action given by matrices on row vectors.
    affine,
    /// A finite presentation with a declared order, built by coset enumeration.
    presented,
  };

  Kind kind = Kind::zoo;
  zoo::Spec spec;
  std::vector<StructureClaim> parts;
  std::uint32_t p = 0;
  std::vector<modular::Mat2> action;
  std::string action_name;
  std::string relators;
  Params params;
  std::uint64_t declared_order = 0;

  static StructureClaim leaf(zoo::Spec s);
  static StructureClaim leaf(zoo::GroupName n, std::vector<std::int64_t> params = {});
  static StructureClaim product(std::vector<StructureClaim> factors);
  static StructureClaim wreath(StructureClaim base);
  static StructureClaim affine(std::uint32_t p, std::vector<modular::Mat2> action, std::string action_name);
  static StructureClaim presented(std::string name, std::string relators, Params params, std::uint64_t order);

  std::string text() const;
  /// Closed form where available; affine claims close the matrix group.
  std::uint64_t order() const;
  PermGroup build() const;
};

} // namespace octoprime
