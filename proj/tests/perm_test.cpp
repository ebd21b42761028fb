#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "octoprime/errors.hpp"
#include "octoprime/perm.hpp"
#include "octoprime/perm_group.hpp"

using namespace octoprime;

namespace {

Perm random_perm(std::size_t n, std::mt19937 &rng)
{
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  std::shuffle(pts.begin(), pts.end(), rng);
  return Perm(pts);
}

Perm cyc(std::string_view text, std::size_t degree) { return Perm::parse_cycles(text, degree); }

PermGroup dihedral(std::uint32_t n)
{
  std::vector<Point> r(n), s(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    r[i] = static_cast<Point>((i + 1) % n);
    s[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Perm(r), Perm(s)}, "D");
}

// Brute-force classes: orbit of every element under conjugation by every element.
std::multiset<std::pair<std::uint64_t, std::uint64_t>> brute_class_shape(std::vector<Perm> const &elems)
{
  std::set<Perm> seen;
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> shape;
  for (auto const &x : elems) {
    if (seen.count(x))
      continue;
    std::set<Perm> cls;
    for (auto const &g : elems)
      cls.insert(g.inverse() * x * g);
    seen.insert(cls.begin(), cls.end());
    shape.insert({x.order(), cls.size()});
  }
  return shape;
}

} // namespace

TEST(Perm, CompositionIsLeftToRight)
{
  auto x = cyc("(1,2)", 3);
  auto y = cyc("(2,3)", 3);
  // x first: 1 -> 2 -> 3
  EXPECT_EQ((x * y)[0], 2);
  EXPECT_EQ((x * y).to_cycles(), "(1,3,2)");
  EXPECT_EQ(x.conjugate_by(y), y.inverse() * x * y);
  EXPECT_EQ(x.conjugate_by(y).to_cycles(), "(1,3)");
}

TEST(Perm, CycleRoundTrip)
{
  auto a = cyc("(1,2)(3,6,7,4,5,8)", 8);
  EXPECT_EQ(a.to_cycles(), "(1,2)(3,6,7,4,5,8)");
  EXPECT_EQ(a.order(), 6u);
  EXPECT_EQ(Perm(5).to_cycles(), "()");
  EXPECT_TRUE(cyc("()", 4).is_identity());
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto x = random_perm(1 + i % 40, rng);
    EXPECT_EQ(cyc(x.to_cycles(), x.degree()), x);
  }
  EXPECT_THROW(cyc("(1,2", 4), ParseError);
  EXPECT_THROW(cyc("(1,9)", 4), ParseError);
  EXPECT_THROW(cyc("(1,2,1)", 4), ParseError);
  EXPECT_THROW(Perm(std::vector<Point>{0, 0}), InvalidArgument);
}

TEST(Perm, GroupAxiomsOnRandomPerms)
{
  std::mt19937 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto n = static_cast<std::size_t>(2 + i % 30);
    auto x = random_perm(n, rng), y = random_perm(n, rng), z = random_perm(n, rng);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_TRUE((x * x.inverse()).is_identity());
    EXPECT_TRUE(x.pow(static_cast<std::int64_t>(x.order())).is_identity());
    EXPECT_EQ(x.pow(-3), x.inverse().pow(3));
    EXPECT_EQ(x.order(), element_order(x));
  }
}

TEST(PermGroup, Table1DegreeEightPair)
{
  PermGroup g(8, {cyc("(1,2)(3,6,7,4,5,8)", 8), cyc("(1,7,2,6,4,5)(3,8)", 8)});
  EXPECT_EQ(g.order(), 168u);
  EXPECT_EQ(closure(g.generators(), 1000).size(), 168u);
}

TEST(PermGroup, DegreeTwentySixSet)
{
  std::vector<Perm> gens = {
    cyc("(1,2,3,4,5,6,7,8,9,10,11,12,13)", 26),
    cyc("(1,8,12,5)(2,3,11,10)(4,6,9,7)", 26),
    cyc("(1,14)(2,15)(3,16)(4,17)(5,18)(6,19)(7,20)(8,21)(9,22)(10,23)(11,24)(12,25)(13,26)", 26),
    cyc("(2,10,4)(3,6,7)(5,11,13)(8,12,9)(15,23,17)(16,19,20)(18,24,26)(21,25,22)", 26),
  };
  EXPECT_EQ(PermGroup(26, gens).order(), 16224u);
}

TEST(PermGroup, ClosureLimit)
{
  PermGroup s5(5, {cyc("(1,2,3,4,5)", 5), cyc("(1,2)", 5)});
  EXPECT_THROW(closure(s5.generators(), 100), LimitExceeded);
  EXPECT_EQ(closure(s5.generators(), 120).size(), 120u);
}

TEST(PermGroup, TableStructure)
{
  PermGroup g = dihedral(7);
  auto const &t = g.elements();
  ASSERT_EQ(t.size(), 14u);
  EXPECT_TRUE(t.perm(0).is_identity());
  for (std::uint32_t i = 1; i < t.size(); ++i) {
    EXPECT_EQ(t.perm(i), t.perm(t.parent(i)) * g.generators()[t.parent_gen(i)]);
    Perm w = g.identity();
    for (auto k : t.word(i))
      w = w * g.generators()[k];
    EXPECT_EQ(w, t.perm(i));
  }
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    EXPECT_TRUE((t.perm(i) * t.perm(t.inverse(i))).is_identity());
    for (std::uint32_t j = 0; j < t.size(); ++j) {
      EXPECT_EQ(t.perm(t.multiply(i, j)), t.perm(i) * t.perm(j));
      EXPECT_EQ(t.perm(t.conjugate(i, j)), t.perm(i).conjugate_by(t.perm(j)));
    }
  }
  EXPECT_THROW(t.index_of(cyc("(1,2)", 7)), NotFound);
}

TEST(PermGroup, LagrangeAndClassEquation)
{
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t const n = 3 + trial % 5;
    PermGroup g(n, {random_perm(n, rng), random_perm(n, rng)});
    auto const order = g.order();
    for (auto o : g.element_orders())
      EXPECT_EQ(order % o, 0u);
    auto const &ci = g.classes();
    std::uint64_t total = 0;
    for (auto s : ci.sizes) {
      EXPECT_EQ(order % s, 0u);
      total += s;
    }
    EXPECT_EQ(total, order);
    auto z = center(g);
    EXPECT_EQ(order % z.size(), 0u);
  }
}

TEST(PermGroup, ClassesMatchBruteForce)
{
  std::mt19937 rng(5);
  std::vector<PermGroup> groups = {
    dihedral(8),
    PermGroup(8, {cyc("(1,2)(3,6,7,4,5,8)", 8), cyc("(1,7,2,6,4,5)(3,8)", 8)}),
    PermGroup(5, {cyc("(1,2,3,4,5)", 5), cyc("(1,2)", 5)}),
    PermGroup(8, {cyc("(1,2,3,4)(5,6,7,8)", 8), cyc("(1,5,3,7)(2,8,4,6)", 8)}),
  };
  for (auto const &g : groups) {
    auto elems = closure(g.generators(), 100000);
    std::multiset<std::pair<std::uint64_t, std::uint64_t>> shape;
    for (auto const &[rep, size] : conjugacy_classes(g))
      shape.insert({rep.order(), size});
    EXPECT_EQ(shape, brute_class_shape(elems));
  }
}

TEST(PermGroup, SerialAndParallelKernelsAgree)
{
  PermGroup s6(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(1,2)", 6)});
  auto const &t = s6.elements();
  EXPECT_EQ(element_orders_serial(t), element_orders_parallel(t));
  auto a = conjugacy_classes_serial(t);
  auto b = conjugacy_classes_parallel(t);
  EXPECT_EQ(a.class_of, b.class_of);
  EXPECT_EQ(a.reps, b.reps);
  EXPECT_EQ(a.sizes, b.sizes);
  EXPECT_EQ(a.sizes.size(), 11u);
}

TEST(PermGroup, CenterAndDerived)
{
  PermGroup q8(8, {cyc("(1,2,3,4)(5,6,7,8)", 8), cyc("(1,5,3,7)(2,8,4,6)", 8)});
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(center(q8).size(), 2u);
  EXPECT_EQ(derived_subgroup(q8).size(), 2u);
  PermGroup s4(4, {cyc("(1,2,3,4)", 4), cyc("(1,2)", 4)});
  EXPECT_EQ(center(s4).size(), 1u);
  EXPECT_EQ(derived_subgroup(s4).size(), 12u);
  auto const &t = s4.elements();
  std::uint32_t const dbl = t.index_of(cyc("(1,2)(3,4)", 4));
  EXPECT_EQ(normal_closure(s4, {dbl}).size(), 4u);
  EXPECT_FALSE(s4.is_abelian());
  EXPECT_TRUE(PermGroup(4, {cyc("(1,2,3,4)", 4)}).is_abelian());
}

TEST(PermGroup, Constructions)
{
  PermGroup c3(3, {cyc("(1,2,3)", 3)});
  PermGroup c2(2, {cyc("(1,2)", 2)});
  EXPECT_EQ(direct_product(c3, c2).order(), 6u);
  EXPECT_TRUE(direct_product(c3, c2).is_abelian());
  EXPECT_EQ(direct_product(std::vector<PermGroup>{c2, c2, c2}).order(), 8u);
  auto w = wreath_c2(c3);
  EXPECT_EQ(w.order(), 18u);
  EXPECT_EQ(closure(w.generators(), 100).size(), 18u);

  using modular::Mat2;
  auto hol = semidirect_p2(5, {Mat2(5, 2, 0, 0, 2)});
  EXPECT_EQ(hol.order(), 100u);
  EXPECT_EQ(closure(hol.generators(), 1000).size(), 100u);

  // C7 @ C3 via multiplication by 2
  auto f21 = affine_extension(7, 1, c3, {ModMatrix::scalar(2)});
  EXPECT_EQ(closure(f21.generators(), 1000).size(), 21u);
  EXPECT_EQ(f21.degree(), 7u);
  // C3 @ C2 acting trivially needs C2's own points to stay faithful
  auto c6 = affine_extension(3, 1, c2, {ModMatrix::scalar(1)});
  EXPECT_EQ(closure(c6.generators(), 100).size(), 6u);
  EXPECT_TRUE(c6.is_abelian());
}

TEST(PermGroup, OrbitsAndRestriction)
{
  PermGroup g(7, {cyc("(1,2,3)(5,6)", 7)});
  auto orb = orbits(g);
  ASSERT_EQ(orb.size(), 4u);
  EXPECT_EQ(orb[0], (std::vector<std::uint32_t>{0, 1, 2}));
  auto r = restrict_to(g, {0, 1, 2});
  EXPECT_EQ(r.degree(), 3u);
  EXPECT_EQ(r.order(), 3u);
}

TEST(PermGroup, KnownOrderMismatchIsDetected)
{
  PermGroup g(4, {cyc("(1,2,3,4)", 4)});
  g.set_known_order(8);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_THROW(g.elements(), Error);
}
