#include <gtest/gtest.h>

#include <numeric>

#include "octoprime/errors.hpp"
#include "octoprime/presentation.hpp"
#include "octoprime/zoo.hpp"

using namespace octoprime;
using namespace octoprime::zoo;

namespace {

std::uint64_t phi(std::uint64_t n)
{
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    c += std::gcd(k, n) == 1;
  return c;
}

// Order by closure, independent of any recorded order.
std::uint64_t closure_order(PermGroup const &g) { return closure(g.generators(), 2000000).size(); }

} // namespace

TEST(Zoo, SmallGroupOrders)
{
  EXPECT_EQ(closure_order(make(GroupName::Quaternion8)), 8u);
  EXPECT_EQ(closure_order(make(GroupName::C4xC2)), 8u);
  EXPECT_EQ(closure_order(make(GroupName::C8)), 8u);
  EXPECT_EQ(closure_order(make(GroupName::ElemAbelian, {2, 3})), 8u);
  EXPECT_EQ(closure_order(make(GroupName::Dihedral, {4})), 8u);
  EXPECT_EQ(closure_order(make(GroupName::Dihedral, {9})), 18u);
  EXPECT_EQ(closure_order(make(GroupName::Sym, {4})), 24u);
  EXPECT_EQ(closure_order(make(GroupName::Alt, {4})), 12u);
  EXPECT_EQ(closure_order(make(GroupName::Alt, {5})), 60u);
  EXPECT_EQ(closure_order(make(GroupName::SL23)), 24u);
  EXPECT_EQ(closure_order(make(GroupName::GL32)), 168u);
  EXPECT_EQ(closure_order(make(GroupName::Frobenius56)), 56u);
  EXPECT_EQ(closure_order(make(GroupName::Complete168)), 168u);
  EXPECT_EQ(closure_order(make(GroupName::Complete216)), 216u);
  EXPECT_EQ(closure_order(make(GroupName::Complete432)), 432u);
  EXPECT_EQ(closure_order(make(GroupName::Coxeter234)), 48u);
  EXPECT_EQ(closure_order(make(GroupName::Coxeter234, {7})), 48u);
  EXPECT_THROW(make(GroupName::Coxeter234, {103}), NotFound);
}

TEST(Zoo, ClosedFormOrdersForSmallPrimes)
{
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    std::int64_t const ip = p;
    EXPECT_EQ(closure_order(make(GroupName::Hol_C, {ip})), static_cast<std::uint64_t>(p) * (p - 1));
    EXPECT_EQ(closure_order(make(GroupName::H_pn, {ip, 2})), std::uint64_t{p} * p * (p * p - 1) * 2);
    EXPECT_EQ(closure_order(make(GroupName::SL23_at_C, {ip})), 24u * (p - 1)) << p;
    if (p <= 7) {
      EXPECT_EQ(closure_order(make(GroupName::GL2, {ip})), std::uint64_t{p * p - 1} * (p * p - p));
      EXPECT_EQ(closure_order(make(GroupName::Hol_Cp2, {ip})), std::uint64_t{p} * p * (p * p - 1) * (p * p - p));
    }
  }
  for (std::uint32_t n = 1; n <= 31; ++n)
    EXPECT_EQ(closure_order(make(GroupName::Hol_C, {n})), n * phi(n)) << n;
  EXPECT_EQ(closure_order(make(GroupName::SL23_at_C, {17})), 24u * 16);
  EXPECT_EQ(make(GroupName::H_pn, {3, 2}).order(), 144u);
  EXPECT_EQ(order({GroupName::Hol_Cp2, {17}}), 22639104u);
}

TEST(Zoo, HolomorphHasRegularNormalSubgroup)
{
  for (std::uint32_t n : {5u, 8u, 9u, 12u}) {
    auto g = make(GroupName::Hol_C, {n});
    // the translation x -> x+1 generates a normal subgroup acting regularly
    auto const &t = g.elements();
    auto const tr = t.index_of(g.generators()[0]);
    auto nc = normal_closure(g, {tr});
    EXPECT_EQ(nc.size(), n);
    std::vector<int> hit(n, 0);
    for (auto i : nc)
      ++hit[t.element(i)[0]];
    for (auto h : hit)
      EXPECT_EQ(h, 1);
  }
}

TEST(Zoo, SL23AtCSatisfiesItsPresentation)
{
  // a^2 = b^3 = (abab ab^-1)^2 = (a,c) = (b,c) = c^x = c^y (ab)^4 = 1
  for (std::uint32_t p : {17u, 41u}) {
    auto m = sl23_at_c_matrices(p);
    ASSERT_EQ(m.size(), 3u);
    Params params{{"x", p - 1}, {"y", (p - 1) / 2}};
    auto pres = parse_presentation("a^2=b^3=(a*b*a*b*a*(b^{-1}))^2=(a,c)=(b,c)=c^x=c^y*(a*b)^4=1", params);
    for (auto const &r : pres.relators)
      EXPECT_TRUE(evaluate_word(r, m, modular::Mat2::identity(p)).is_identity()) << p;
    EXPECT_EQ(modular::mat2_group(p, m, 100000).size(), 24u * (p - 1));
  }
}

TEST(Zoo, Tokens)
{
  EXPECT_EQ(token({GroupName::Hol_C, {5}}), "Hol(C_5)");
  EXPECT_EQ(token({GroupName::H_pn, {3, 2}}), "H(3^2)");
  EXPECT_EQ(token({GroupName::GL2, {7}}), "GL(2,7)");
  for (auto const &s : std::vector<Spec>{{GroupName::Hol_C, {5}},
                                         {GroupName::H_pn, {3, 2}},
                                         {GroupName::GL2, {7}},
                                         {GroupName::Hol_Cp2, {17}},
                                         {GroupName::SL23_at_C, {11}},
                                         {GroupName::Coxeter234, {}},
                                         {GroupName::Coxeter234, {23}},
                                         {GroupName::Dihedral, {4}},
                                         {GroupName::Sym, {4}},
                                         {GroupName::Quaternion8, {}},
                                         {GroupName::C4xC2, {}},
                                         {GroupName::ElemAbelian, {2, 3}},
                                         {GroupName::Frobenius56, {}},
                                         {GroupName::Complete432, {}}})
    EXPECT_EQ(parse_token(token(s)), s) << token(s);
  EXPECT_EQ(parse_token("S4"), (Spec{GroupName::Sym, {4}}));
  EXPECT_EQ(parse_token("Q2"), (Spec{GroupName::Quaternion8, {}}));
  EXPECT_EQ(parse_token("E8"), (Spec{GroupName::ElemAbelian, {2, 3}}));
  EXPECT_EQ(parse_token("Hol(C_7 x C_7)"), (Spec{GroupName::Hol_Cp2, {7}}));
  EXPECT_THROW(parse_token("Monster"), ParseError);
  EXPECT_THROW(make(GroupName::Hol_Cp2, {9}), InvalidArgument);
  EXPECT_THROW(make(GroupName::Cyclic, {}), InvalidArgument);
}
