#include <gtest/gtest.h>

#include <random>

#include "octoprime/errors.hpp"
#include "octoprime/modular.hpp"
#include "octoprime/perm.hpp"
#include "octoprime/presentation.hpp"

using namespace octoprime;

namespace {

Word w(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }

} // namespace

TEST(Presentation, DihedralExample)
{
  auto pres = parse_presentation("a^4=b^2=a^b*a=1");
  ASSERT_EQ(pres.generators, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(pres.relators.size(), 3u);
  EXPECT_EQ(pres.relators[0], w({{0, 4}}));
  EXPECT_EQ(pres.relators[1], w({{1, 2}}));
  EXPECT_EQ(pres.relators[2], w({{1, -1}, {0, 1}, {1, 1}, {0, 1}}));
}

TEST(Presentation, SingleRelator)
{
  auto pres = parse_presentation("a^2=1");
  EXPECT_EQ(pres.generators.size(), 1u);
  ASSERT_EQ(pres.relators.size(), 1u);
  EXPECT_EQ(pres.relators[0], w({{0, 2}}));
}

TEST(Presentation, SymbolicExponents)
{
  auto pres = parse_presentation("c^p=a^4=b^2=a^b*a=c^a*c=(b,c)=1", {{"p", 5}});
  EXPECT_EQ(pres.generators, (std::vector<std::string>{"c", "a", "b"}));
  ASSERT_EQ(pres.relators.size(), 6u);
  EXPECT_EQ(pres.relators[0], w({{0, 5}}));
  // (b,c) = b^-1 c^-1 b c
  EXPECT_EQ(pres.relators[5], w({{2, -1}, {0, -1}, {2, 1}, {0, 1}}));
}

TEST(Presentation, ExponentForms)
{
  Params params{{"p", 7}, {"q", 3}, {"x", 2}};
  std::vector<std::string> gens{"a", "b"};
  EXPECT_EQ(parse_word("a^-1", gens), w({{0, -1}}));
  EXPECT_EQ(parse_word("a^(-1)", gens), w({{0, -1}}));
  EXPECT_EQ(parse_word("a^{-1}", gens), w({{0, -1}}));
  EXPECT_EQ(parse_word("a^-x", gens, params), w({{0, -2}}));
  EXPECT_EQ(parse_word("b^{(4q)}", gens, params), w({{1, 12}}));
  EXPECT_EQ(parse_word("b^{-(p-5)}", gens, params), w({{1, -2}}));
  EXPECT_EQ(parse_word("b^{(p-1)}", gens, params), w({{1, 6}}));
  EXPECT_EQ(parse_word("(a*b^-1)^3", gens), w({{0, 1}, {1, -1}, {0, 1}, {1, -1}, {0, 1}, {1, -1}}));
  EXPECT_EQ(parse_word("((a^-1)*b)^2", gens), w({{0, -1}, {1, 1}, {0, -1}, {1, 1}}));
}

TEST(Presentation, ChainWithoutTrailingOne)
{
  auto pres = parse_presentation("a^3=b^2; a*b=b*a^2");
  ASSERT_EQ(pres.relators.size(), 2u);
  EXPECT_EQ(pres.relators[0], w({{0, 3}, {1, -2}}));
  EXPECT_EQ(pres.relators[1], w({{0, 1}, {1, 1}, {0, -2}, {1, -1}}));
}

TEST(Presentation, Errors)
{
  EXPECT_THROW(parse_presentation("a^{p}=1"), ParseError);
  EXPECT_THROW(parse_presentation("a^4=*b=1"), ParseError);
  EXPECT_THROW(parse_presentation("a^4=b^2=1", {}, std::vector<std::string>{"a"}), ParseError);
  EXPECT_THROW(parse_presentation("(a,b=1"), ParseError);
  EXPECT_THROW(parse_presentation(""), ParseError);
  try {
    parse_presentation("a^4=b^2=a^b*a=$");
    FAIL();
  } catch (ParseError const &e) {
    EXPECT_EQ(e.position(), 14u);
  }
}

TEST(Presentation, DigitSuffixedNames)
{
  auto pres = parse_presentation("c1^3=c2^3=(c1,c2)=1");
  EXPECT_EQ(pres.generators, (std::vector<std::string>{"c1", "c2"}));
  EXPECT_EQ(pres.relators.size(), 3u);
}

TEST(Presentation, InvertWord)
{
  EXPECT_EQ(invert_word(w({{0, 2}, {1, -1}})), w({{1, 1}, {0, -2}}));
  EXPECT_EQ(invert_word(Word()), Word());
  EXPECT_EQ(invert_word(w({{0, 1}, {1, 1}, {0, -1}})), w({{0, 1}, {1, -1}, {0, -1}}));
}

TEST(Presentation, RandomWordsInvolution)
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(0, 3);
  std::uniform_int_distribution<int> ex(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> letters;
    int const len = trial % 64;
    for (int i = 0; i < len; ++i)
      letters.push_back({static_cast<std::uint32_t>(gen(rng)), ex(rng)});
    Word x(letters);
    EXPECT_EQ(invert_word(invert_word(x)), x);
    EXPECT_TRUE((x * invert_word(x)).empty());
  }
}

TEST(Presentation, FreeReductionIsConfluent)
{
  // Reduce letter sequences by cancelling random adjacent inverse pairs; the
  // normal form must not depend on the order of cancellations.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> gen(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::pair<int, int>> seq;
    int const len = 1 + trial % 64;
    for (int i = 0; i < len; ++i)
      seq.push_back({gen(rng), sign(rng) ? 1 : -1});
    auto reduce_randomly = [&](std::vector<std::pair<int, int>> s) {
      for (;;) {
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
          if (s[i].first == s[i + 1].first && s[i].second == -s[i + 1].second)
            spots.push_back(i);
        }
        if (spots.empty())
          return s;
        auto const at = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(at), s.begin() + static_cast<std::ptrdiff_t>(at) + 2);
      }
    };
    auto a = reduce_randomly(seq);
    auto b = reduce_randomly(seq);
    EXPECT_EQ(a, b);
    std::vector<Letter> letters;
    for (auto [g, e] : seq)
      letters.push_back({static_cast<std::uint32_t>(g), e});
    Word const reduced(letters);
    std::vector<Letter> expanded;
    for (auto const &l : reduced.letters()) {
      for (std::int64_t k = 0; k < (l.exp < 0 ? -l.exp : l.exp); ++k)
        expanded.push_back({l.gen, l.exp < 0 ? -1 : 1});
    }
    std::vector<Letter> from_random;
    for (auto [g, e] : a)
      from_random.push_back({static_cast<std::uint32_t>(g), e});
    EXPECT_EQ(expanded, from_random);
  }
}

TEST(Presentation, RoundTrip)
{
  std::vector<std::pair<std::string, Params>> texts = {
    {"a^4=b^2=a^b*a=1", {}},
    {"c^p=a^4=b^2=a^b*a=c^a*c=(b,c)=1", {{"p", 7}}},
    {"a^4=b^2=(a,b)=c^p=d^p=(c,d)=c^a*c^x=d^a*d=(b,c)=d^b*d=1", {{"p", 5}, {"x", 2}}},
    {"a^2=b^2=c^3=(a,c)=(a*d)^2=(b,c)=c*d^2*(c^-1)*d=a*b*a*d*b*(d^-1)=(a*b)^2*(d^-1)*b*d=1", {}},
    {"a^3=b^4=(a,b^2)=a*b*(a*(b^{-1}))^3=1", {}},
  };
  for (auto const &[text, params] : texts) {
    auto p1 = parse_presentation(text, params);
    auto printed = format_presentation(p1);
    auto p2 = parse_presentation(printed, {}, p1.generators);
    EXPECT_EQ(p1, p2) << printed;
  }
}

TEST(Presentation, EvaluateWord)
{
  Perm four(std::vector<Point>{1, 2, 3, 0});
  EXPECT_TRUE(evaluate_word(parse_word("a^4", {"a"}), std::vector<Perm>{four}, Perm(4)).is_identity());
  Perm x(std::vector<Point>{1, 0, 2, 3});
  Perm y(std::vector<Point>{0, 1, 3, 2});
  EXPECT_TRUE(evaluate_word(parse_word("(a,b)", {"a", "b"}), std::vector<Perm>{x, y}, Perm(4)).is_identity());
  using modular::Mat2;
  Mat2 a(7, -1, 1, -1, 0);
  Mat2 b(7, 1, 1, 5, -1);
  auto r = evaluate_word(parse_word("a*b*(a*b^-1)^3", {"a", "b"}), std::vector<Mat2>{a, b}, Mat2::identity(7));
  EXPECT_EQ(r, Mat2::identity(7));
}

TEST(Presentation, EvaluateWordTimesInverseIsIdentity)
{
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Perm> images;
    for (int g = 0; g < 3; ++g) {
      std::vector<Point> pts(9);
      std::iota(pts.begin(), pts.end(), Point{0});
      std::shuffle(pts.begin(), pts.end(), rng);
      images.emplace_back(pts);
    }
    std::vector<Letter> letters;
    for (int i = 0; i < 20; ++i)
      letters.push_back({static_cast<std::uint32_t>(rng() % 3), static_cast<std::int64_t>(rng() % 5) - 2});
    Word x(letters);
    EXPECT_TRUE(evaluate_word(x * invert_word(x), images, Perm(9)).is_identity());
    auto direct = evaluate_word(x, images, Perm(9));
    EXPECT_EQ(evaluate_word(invert_word(x), images, Perm(9)), direct.inverse());
  }
}
