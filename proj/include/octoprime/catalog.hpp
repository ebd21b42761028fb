#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octoprime/claim.hpp"
#include "octoprime/modular.hpp"
#include "octoprime/perm_group.hpp"
#include "octoprime/presentation.hpp"

namespace octoprime::catalog {

/// Order of the group and shape of its odd part: 8, 8p, 8p^2 with C_p x C_p,
/// 8p^2 with C_{p^2}, and the order 4p^2 groups of the C_4 notes.
enum class OrderClass
{
  order8,
  order8p,
  order8p2,
  order8p2_cyclic,
  order4p2,
};

/// Image of the 2-group in Aut of the odd part, or the kind of non-split case.
enum class Image
{
  direct,
  c2,
  c2xc2,
  c4,
  c8,
  full,
  /// normal Sylow 2-subgroup, odd part not normal
  sylow2,
  /// neither Sylow subgroup normal
  nonnormal,
};

std::string to_string(OrderClass c);
std::string to_string(Image i);

/// Text form "<class>:<2-group>:<image>:<variant>@p=<p>", e.g.
/// "8p2:C8:c8-image:row4@p=17", "8p:D4:c2-image:a@p=3", "8:Q2:direct".
/// Variants:
///   c2 image        a | b (8p, 8p2cyc);  a-one | a-both | b-one | b-both (8p2)
///   c2xc2 image     [a,b] | [ab,b] | [ab,a]
///   c4 image        a (8p, 8p2cyc);  rot | x1 | x-1 | xx | xinv (8p2, 4p2);  eq24 (4p2)
///   c8 image        a (8p, 8p2cyc);  row4 row7 row10..row17 (8p2)
///   full image      [a,b] | [a,ab] (C4xC2);  empty (D4, Q2)
///   sylow2          A4xC2 SL23 Frobenius56 (8p);  A4xC3xC2 SL23xC3 F56xC7 (8p2);  V4C9xC2 Q2C9 E8C49 (8p2cyc)
///   nonnormal       S4 (8p);  S4xC3 A4xS3 A4C3C2 (8p2);  V4D9 (8p2cyc)
/// "-one" acts by diag(-1,1) on C_p x C_p, "-both" by -1. The c4 actions are
/// rot = (0,1;-1,0), x1 = diag(x,1), x-1 = diag(x,-1), xx = diag(x,x) and
/// xinv = diag(x,1/x) with x the least primitive 4th root of unity.
struct CaseLabel
{
  OrderClass order_class = OrderClass::order8p;
  std::string two_group;
  Image image = Image::direct;
  std::string variant;
  std::uint32_t p = 0;

  bool operator==(CaseLabel const &) const = default;
};

std::string format_label(CaseLabel const &label);

/// Also accepts labels without the image token when the variant determines
/// it, and the alias "zhang:<n>@p=<p>" for the numbering of the C_8 cases in
/// the order 8p^2 classification. Throws ParseError.
CaseLabel parse_label(std::string_view text);

/// The C_8 case with the given number in that numbering, checked against p.
CaseLabel zhang_alias(std::uint32_t number, std::uint32_t p);

/// Every case of the class for p (p is ignored for order 8).
std::vector<CaseLabel> enumerate_cases(std::uint32_t p, OrderClass order_class);

/// The non-direct (C_p x C_p) @ C_8 cases: 2 + 1 + 1, 2 + 4 + 1 or 2 + 4 + 8.
std::vector<CaseLabel> c8_family(std::uint32_t p);

/// label is one of enumerate_cases, or the eq24 form at any odd p.
bool is_valid(CaseLabel const &label);

/// Order the label declares: 8, 8p, 8p^2 or 4p^2.
std::uint64_t declared_order(CaseLabel const &label);

/// Action of each 2-group generator on C_p x C_p (row vectors), for labels
/// with a normal C_p x C_p.
std::vector<modular::Mat2> action_matrices(CaseLabel const &label);

/// Relators defining the case; the generators of build_case are
/// presentation_generators in the same order.
std::string case_relators(CaseLabel const &label);
std::vector<std::string> presentation_generators(CaseLabel const &label);

/// Builds the case and checks its order and relators. Throws InvalidArgument
/// when the label is invalid for p.
PermGroup build_case(CaseLabel const &label);

/// True when every relator evaluates to the identity on the group's generators.
bool satisfies_relators(PermGroup const &g, CaseLabel const &label);

/// The published structure of Aut. Throws NotFound when none is given.
StructureClaim expected_aut(CaseLabel const &label);

/// Resolved (possibly parametrized) presentations from the D_4 and Q_2 notes.
struct PresentedClaim
{
  std::string relators;
  Params params;
  /// true when the parameters are the printed ones
  bool printed = false;
};

/// The D_4-image Aut presentation for p; nullopt where the notes give none
/// that applies (p = 1 mod 8 other than 17, and p = 5).
std::optional<PresentedClaim> table_d_presentation(std::uint32_t p);

/// The Q_2-image Aut presentation for p; nullopt when the parameters cannot
/// be resolved.
std::optional<PresentedClaim> table_q_presentation(std::uint32_t p);

/// (C_p x C_p) @ C_8 from the printed form a^c*a^w*b^x = b^c*a^y*b^z = 1.
std::string eq23_relators(std::int64_t w, std::int64_t x, std::int64_t y, std::int64_t z);

/// The printed (w,x;y,z) entries per residue example, keyed by their label.
struct PrintedAction
{
  CaseLabel label;
  std::int64_t w, x, y, z;
};
std::vector<PrintedAction> printed_c8_actions(std::uint32_t p);

/// Number of elements whose order is a power of p equals the p-part of |G|.
bool sylow_normal(PermGroup const &g, std::uint32_t p);

} // namespace octoprime::catalog
