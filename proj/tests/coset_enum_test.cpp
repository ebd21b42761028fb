#include <gtest/gtest.h>

#include "octoprime/coset_enum.hpp"
#include "octoprime/errors.hpp"
#include "octoprime/perm_group.hpp"
#include "octoprime/presentation.hpp"

using namespace octoprime;

namespace {

constexpr char kPres216[] =
  "a^2=b^2=c^3=(a,c)=(a*d)^2=(b,c)=c*d^2*(c^{-1})*d=a*b*a*d*b*(d^{-1})=(a*b)^2*(d^{-1})*b*d=1";
constexpr char kPres432[] =
  "a^4=b^2=c^3=d^2=(a,c)=(a,d)=(a,d)=(b,d)=(c*d)^2=(a*b)^3=(b*c)^2*(b*(c^{-1}))^2=a*b*a*c*b*c*a*b*c=1";

void expect_relators_hold(Presentation const &pres, CosetEnumeration const &ce)
{
  ASSERT_EQ(ce.generators.size(), pres.generators.size());
  Perm const id(ce.generators.front().degree());
  for (auto const &r : pres.relators)
    EXPECT_TRUE(evaluate_word(r, ce.generators, id).is_identity()) << format_word(r, pres.generators);
}

} // namespace

TEST(CosetEnum, Dihedral)
{
  auto pres = parse_presentation("a^4=b^2=a^b*a=1");
  auto ce = enumerate(pres);
  EXPECT_EQ(ce.order, 8u);
  expect_relators_hold(pres, ce);
  EXPECT_EQ(closure(ce.generators, 100).size(), 8u);
}

TEST(CosetEnum, TrivialAndCyclic)
{
  EXPECT_EQ(enumerate(parse_presentation("a=1")).order, 1u);
  EXPECT_EQ(enumerate(parse_presentation("a^6=1")).order, 6u);
  EXPECT_EQ(enumerate(parse_presentation("a^6=a^4=1")).order, 2u);
}

TEST(CosetEnum, Table3Complete216)
{
  auto pres = parse_presentation(kPres216);
  auto ce = enumerate(pres);
  EXPECT_EQ(ce.order, 216u);
  expect_relators_hold(pres, ce);
  EXPECT_EQ(closure(ce.generators, 1000).size(), 216u);
}

TEST(CosetEnum, Table3Complete432)
{
  auto pres = parse_presentation(kPres432);
  auto ce = enumerate(pres);
  EXPECT_EQ(ce.order, 432u);
  expect_relators_hold(pres, ce);
  auto g = enumerate_group(pres);
  EXPECT_EQ(g.order(), 432u);
  EXPECT_EQ(g.classes().sizes.size(), 20u);
}

TEST(CosetEnum, Deterministic)
{
  auto pres = parse_presentation(kPres216);
  auto a = enumerate(pres);
  auto b = enumerate(pres);
  EXPECT_EQ(a.order, b.order);
  EXPECT_EQ(a.generators, b.generators);
}

TEST(CosetEnum, InfiniteGroupHitsLimit)
{
  EXPECT_THROW(enumerate(parse_presentation("(a,b)=1"), 5000), LimitExceeded);
}

TEST(CosetEnum, OrderMatchesClosureForSmallGroups)
{
  std::vector<std::pair<std::string, Params>> cases = {
    {"a^p=b^4=a^b*a^x=1", {{"p", 13}, {"x", 5}}},
    {"a^3=b^4=(a,b^2)=a*b*(a*(b^{-1}))^3=1", {}},
    {"a^2=b^3=(a*b)^4=1", {}},
    {"a^2=b^3=(a*b)^5=1", {}},
    {"a^4=b^4=(a,b)=1", {}},
  };
  for (auto const &[text, params] : cases) {
    auto pres = parse_presentation(text, params);
    auto ce = enumerate(pres);
    expect_relators_hold(pres, ce);
    EXPECT_EQ(closure(ce.generators, 10000).size(), ce.order) << text;
  }
}

TEST(ReduceDegree, Examples)
{
  auto c6 = enumerate_group(parse_presentation("a^6=1"));
  auto r6 = reduce_degree(c6);
  EXPECT_LE(r6.degree(), 6u);
  EXPECT_EQ(closure(r6.generators(), 100).size(), 6u);

  auto d4 = enumerate_group(parse_presentation("a^4=b^2=a^b*a=1"));
  EXPECT_EQ(d4.degree(), 8u);
  auto r = reduce_degree(d4);
  EXPECT_EQ(r.degree(), 4u);
  EXPECT_EQ(closure(r.generators(), 100).size(), 8u);

  auto c7 = enumerate_group(parse_presentation("a^7=1"));
  EXPECT_EQ(reduce_degree(c7).degree(), 7u);
}

TEST(ReduceDegree, PreservesRelatorsAndOrder)
{
  for (char const *text : {kPres216, kPres432}) {
    auto pres = parse_presentation(text);
    auto g = enumerate_group(pres);
    auto r = reduce_degree(g);
    EXPECT_LE(r.degree(), g.degree());
    EXPECT_LT(r.degree(), 40u);
    EXPECT_EQ(closure(r.generators(), 1000).size(), g.order());
    Perm const id(r.degree());
    for (auto const &rel : pres.relators)
      EXPECT_TRUE(evaluate_word(rel, r.generators(), id).is_identity());
  }
}
