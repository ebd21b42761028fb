#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "octoprime/errors.hpp"
#include "octoprime/modular.hpp"

using namespace octoprime;
using namespace octoprime::modular;

namespace {

std::vector<std::uint32_t> small_odd_primes(std::uint32_t bound)
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 3; n <= bound; n += 2) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      prime = prime && n % d != 0;
    if (prime)
      out.push_back(n);
  }
  return out;
}

} // namespace

TEST(Modular, RootsOfUnityExamples)
{
  EXPECT_EQ(roots_of_unity(13, 4), (std::vector<std::uint32_t>{1, 5, 8, 12}));
  EXPECT_EQ(roots_of_unity(7, 2), (std::vector<std::uint32_t>{1, 6}));
  auto r = roots_of_unity(17, 8);
  EXPECT_EQ(r.size(), 8u);
  EXPECT_NE(std::find(r.begin(), r.end(), 2u), r.end());
}

TEST(Modular, RootsOfUnityCountIsGcd)
{
  for (auto p : small_odd_primes(263)) {
    for (std::uint32_t k : {2u, 4u, 8u}) {
      auto r = roots_of_unity(p, k);
      EXPECT_EQ(r.size(), std::gcd(k, p - 1)) << "p=" << p << " k=" << k;
      EXPECT_TRUE(std::is_sorted(r.begin(), r.end()));
    }
  }
}

TEST(Modular, SqrtExamples)
{
  auto r = sqrt_mod(11, -2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->first, 3u);
  EXPECT_EQ(r->second, 8u);
  auto s = sqrt_mod(7, 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->first, 3u);
  EXPECT_FALSE(sqrt_mod(7, 3));
}

TEST(Modular, SqrtMatchesEulerCriterion)
{
  for (auto p : small_odd_primes(131)) {
    for (std::int64_t c = 1; c < p; ++c) {
      auto r = sqrt_mod(p, c);
      bool const euler = pow_mod(static_cast<std::uint64_t>(c), (p - 1) / 2, p) == 1;
      EXPECT_EQ(r.has_value(), euler) << p << " " << c;
      if (r) {
        EXPECT_EQ(static_cast<std::uint64_t>(r->first) * r->first % p, static_cast<std::uint64_t>(c));
        EXPECT_EQ(static_cast<std::uint64_t>(r->second) * r->second % p, static_cast<std::uint64_t>(c));
      }
    }
  }
}

TEST(Modular, PrimitiveRoot)
{
  EXPECT_EQ(primitive_root(17), 3u);
  EXPECT_EQ(primitive_root(7), 3u);
  EXPECT_EQ(primitive_root(3), 2u);
  for (auto p : small_odd_primes(263))
    EXPECT_EQ(multiplicative_order(primitive_root(p), p), p - 1);
}

TEST(Modular, ResidueClass)
{
  EXPECT_EQ(residue_class_mod8(17), 1u);
  EXPECT_EQ(residue_class_mod8(7), 7u);
  EXPECT_EQ(residue_class_mod8(3), 3u);
  EXPECT_THROW(residue_class_mod8(9), InvalidArgument);
}

TEST(Modular, FpArithmetic)
{
  FpElem a(5, 7);
  FpElem b(-3, 7);
  EXPECT_EQ(b.value(), 4u);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((a * b).value(), 6u);
  EXPECT_EQ((a / b * b).value(), 5u);
  EXPECT_EQ(a.pow(6).value(), 1u);
  EXPECT_EQ((a * a.inverse()).value(), 1u);
  EXPECT_THROW(FpElem(0, 7).inverse(), InvalidArgument);
  EXPECT_THROW(FpElem(1, 15), InvalidArgument);
}

TEST(Modular, Fp2FieldAxioms)
{
  std::mt19937 rng(12345);
  for (auto p : small_odd_primes(31)) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Fp2Elem x(d(rng), d(rng), p);
      Fp2Elem y(d(rng), d(rng), p);
      Fp2Elem z(d(rng), d(rng), p);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * y, y * x);
      if (!x.is_zero())
        EXPECT_EQ(x * x.inverse(), Fp2Elem(1, 0, p));
      // Frobenius is a field automorphism of order 2
      EXPECT_EQ((x * y).frobenius(), x.frobenius() * y.frobenius());
      EXPECT_EQ(x.frobenius().frobenius(), x);
    }
    // multiplicative group is cyclic of order p^2 - 1
    std::uint64_t const q = static_cast<std::uint64_t>(p) * p - 1;
    for (std::uint32_t idx = 1; idx < p * p; ++idx)
      EXPECT_EQ(Fp2Elem::from_index(idx, p).pow(q), Fp2Elem(1, 0, p));
  }
}

TEST(Modular, Mat2Basics)
{
  Mat2 a(7, -1, 1, -1, 0);
  Mat2 b(7, 1, 1, 5, -1);
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(b.order(), 4u);
  EXPECT_EQ(a * a.inverse(), Mat2::identity(7));
  EXPECT_EQ(a.pow(-1), a.inverse());
  // row-vector action: (1,0) * a is the first row of a
  EXPECT_EQ(a.apply(1, 0), (std::pair<std::uint32_t, std::uint32_t>{6, 1}));
  EXPECT_THROW(Mat2(7, 1, 2, 2, 4).inverse(), SingularMatrix);
}

TEST(Modular, Mat2GroupExamples)
{
  // Q2 with x = y = 1 at p = 3: x^2 + y^2 = 2 = -1
  Mat2 qa(3, 1, 1, 1, -1);
  Mat2 qb(3, 0, 1, -1, 0);
  EXPECT_EQ(mat2_group(3, {qa, qb}, 1000).size(), 8u);
  Mat2 a(7, -1, 1, -1, 0);
  Mat2 b(7, 1, 1, 5, -1);
  auto g = mat2_group(7, {a, b}, 1000);
  EXPECT_EQ(g.size(), 48u);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_EQ(mat2_group(5, {Mat2::identity(5)}, 10).size(), 1u);
  EXPECT_THROW(mat2_group(7, {a, b}, 20), LimitExceeded);
  EXPECT_THROW(mat2_group(7, {Mat2(7, 1, 1, 1, 1)}, 20), SingularMatrix);
}
