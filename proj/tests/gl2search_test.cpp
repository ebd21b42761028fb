#include <gtest/gtest.h>

#include <set>

#include "octoprime/gl2search.hpp"
#include "octoprime/modular.hpp"

using namespace octoprime;
using namespace octoprime::gl2search;
using modular::Mat2;

namespace {

using Pairs = std::set<std::vector<std::uint32_t>>;

Pairs tuples(SearchResult const &r)
{
  Pairs out;
  for (auto const &s : r.solutions)
    out.insert(s.tuple);
  return out;
}

std::vector<std::uint32_t> primes_7_mod_8(std::uint32_t bound)
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 7; p <= bound; p += 8) {
    if (modular::is_prime(p))
      out.push_back(p);
  }
  return out;
}

// Test-side oracle: relators checked by direct matrix products.
bool a22_by_hand(Mat2 const &a, Mat2 const &b)
{
  auto const id = Mat2::identity(a.p);
  auto const b2 = b * b;
  auto const t = a * b.inverse();
  return (a * a * a) == id && (b2 * b2) == id && (a * b2) == (b2 * a) && (a * b * t * t * t) == id;
}

} // namespace

TEST(Gl2Search, SpecialExamples)
{
  EXPECT_EQ(tuples(search_special(7)), (Pairs{{1, 5}, {2, 6}}));
  EXPECT_EQ(tuples(search_special(23)), (Pairs{{7, 3}, {20, 16}}));
  EXPECT_EQ(search_special(103).count(), 0u);
}

TEST(Gl2Search, SpecialEmptyExactlyAtPrintedPrimes)
{
  std::set<std::uint32_t> empty;
  for (auto p : primes_7_mod_8(271)) {
    auto r = search_special(p);
    if (r.count() == 0)
      empty.insert(p);
    for (auto const &s : r.solutions) {
      EXPECT_EQ((static_cast<std::uint64_t>(s.tuple[0]) * s.tuple[1] + 2) % p, 0u);
      EXPECT_EQ(s.group_order, 48u);
      EXPECT_TRUE(a22_by_hand(matrix_a(p), Mat2(p, 1, s.tuple[0], s.tuple[1], -1)));
    }
  }
  EXPECT_EQ(empty, (std::set<std::uint32_t>{103, 127, 151, 263}));
}

TEST(Gl2Search, SpecialNecessityOfXY)
{
  for (std::uint32_t p : {7u, 23u, 31u}) {
    EXPECT_EQ(tuples(search_special(p, true)), tuples(search_special(p, false))) << p;
  }
}

TEST(Gl2Search, SerialAndParallelAgree)
{
  EXPECT_EQ(tuples(search_special(47, false, Exec::serial)), tuples(search_special(47, false, Exec::parallel)));
  EXPECT_EQ(tuples(search_order4q(31, 1000, Exec::serial)), tuples(search_order4q(31, 1000, Exec::parallel)));
}

TEST(Gl2Search, GeneralIncludesPrintedTuples)
{
  auto r7 = search_general(7, 100000);
  EXPECT_TRUE(r7.exhaustive);
  EXPECT_TRUE(r7.contains({1, 1, 5, 6}));
  auto r103 = search_general(103, 1000000);
  EXPECT_TRUE(r103.contains({99, 99, 30, 4}));
  EXPECT_TRUE(r103.contains({43, 43, 48, 60}));
  auto r127 = search_general(127, 1000000);
  EXPECT_TRUE(r127.contains({65, 65, 19, 62}));
  for (auto const &s : r103.solutions) {
    Mat2 const b(103, s.tuple[0], s.tuple[1], s.tuple[2], s.tuple[3]);
    EXPECT_EQ(b.order(), 4u);
    EXPECT_TRUE(a22_by_hand(matrix_a(103), b));
  }
  auto truncated = search_general(103, 3);
  EXPECT_EQ(truncated.count(), 3u);
  EXPECT_FALSE(truncated.exhaustive);
}

TEST(Gl2Search, Order4q)
{
  auto r7 = search_order4q(7, 1000);
  EXPECT_EQ(r7.count(), 4u);
  EXPECT_TRUE(r7.contains({1, 4}));
  auto r23 = search_order4q(23, 1000);
  EXPECT_EQ(r23.count(), 22u);
  EXPECT_TRUE(r23.contains({1, 9}));
  EXPECT_EQ(search_order4q(31, 1000).count(), 16u);
  auto r103 = search_order4q(103, 100000);
  EXPECT_TRUE(r103.contains({1, 44}));
  for (auto const &s : r23.solutions) {
    EXPECT_EQ(s.matrix_order, 44u);
    EXPECT_EQ(s.group_order, 24u * 22u);
  }
}

TEST(Gl2Search, DeriveGeneral)
{
  auto g = derive_general_from_order4q(103, {1, 44});
  Mat2 const b(103, g[0], g[1], g[2], g[3]);
  EXPECT_EQ(b.order(), 4u);
  EXPECT_TRUE(a22_by_hand(matrix_a(103), b));
  auto g7 = derive_general_from_order4q(7, {1, 4});
  EXPECT_EQ(modular::mat2_group(7, {matrix_a(7), Mat2(7, g7[0], g7[1], g7[2], g7[3])}, 1000).size(), 48u);
  auto r151 = search_order4q(151, 1);
  ASSERT_EQ(r151.count(), 1u);
  auto g151 = derive_general_from_order4q(151, {r151.solutions[0].tuple[0], r151.solutions[0].tuple[1]});
  EXPECT_TRUE(a22_by_hand(matrix_a(151), Mat2(151, g151[0], g151[1], g151[2], g151[3])));
}
