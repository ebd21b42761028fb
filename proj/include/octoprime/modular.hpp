#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octoprime::modular {

bool is_prime(std::uint64_t n);

/// Least n >= 1 with a^n = 1 mod p. `a` must be a unit mod p.
std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t p);

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p);

/// Element of GF(p), p an odd prime.
class FpElem
{
public:
  FpElem(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }

  FpElem operator+(FpElem other) const;
  FpElem operator-(FpElem other) const;
  FpElem operator*(FpElem other) const;
  FpElem operator/(FpElem other) const;
  FpElem operator-() const;
  FpElem pow(std::int64_t exp) const;
  FpElem inverse() const;

  bool operator==(FpElem const &) const = default;

private:
  std::uint32_t value_;
  std::uint32_t p_;
};

/// Smallest quadratic non-residue mod p.
std::uint32_t smallest_nonresidue(std::uint32_t p);

/// Element c0 + c1*theta of GF(p^2), theta^2 = smallest non-residue mod p.
class Fp2Elem
{
public:
  Fp2Elem(std::int64_t c0, std::int64_t c1, std::uint32_t p);

  std::uint32_t c0() const noexcept { return c0_; }
  std::uint32_t c1() const noexcept { return c1_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return c0_ == 0 && c1_ == 0; }

  Fp2Elem operator+(Fp2Elem const &other) const;
  Fp2Elem operator-(Fp2Elem const &other) const;
  Fp2Elem operator*(Fp2Elem const &other) const;
  Fp2Elem operator/(Fp2Elem const &other) const;
  Fp2Elem pow(std::uint64_t exp) const;
  Fp2Elem inverse() const;
  /// x -> x^p, the generator of Gal(GF(p^2)/GF(p)).
  Fp2Elem frobenius() const;

  /// Dense index c0 + p*c1 in [0, p^2).
  std::uint32_t index() const noexcept { return c0_ + p_ * c1_; }
  static Fp2Elem from_index(std::uint32_t index, std::uint32_t p);

  bool operator==(Fp2Elem const &) const = default;

private:
  std::uint32_t c0_;
  std::uint32_t c1_;
  std::uint32_t p_;
  std::uint32_t nonresidue_;
};

/// 2x2 matrix over GF(p), row-major (m00, m01, m10, m11).
///
/// Acts on row vectors from the right: v -> v * M.
struct Mat2
{
  std::uint32_t p = 0;
  std::array<std::uint32_t, 4> m{};

  Mat2() = default;
  Mat2(std::uint32_t p, std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11);

  static Mat2 identity(std::uint32_t p) { return Mat2(p, 1, 0, 0, 1); }
  static Mat2 scalar(std::uint32_t p, std::int64_t s) { return Mat2(p, s, 0, 0, s); }
  static Mat2 diag(std::uint32_t p, std::int64_t a, std::int64_t b) { return Mat2(p, a, 0, 0, b); }

  std::uint32_t det() const;
  std::uint32_t trace() const;
  bool invertible() const { return det() != 0; }
  bool is_identity() const;

  Mat2 operator*(Mat2 const &other) const;
  Mat2 operator-() const;
  Mat2 inverse() const;
  Mat2 pow(std::int64_t exp) const;
  /// Multiplicative order; the matrix must be invertible.
  std::uint64_t order() const;

  /// Image of the row vector (x, y).
  std::pair<std::uint32_t, std::uint32_t> apply(std::uint32_t x, std::uint32_t y) const;

  std::string to_string() const;

  bool operator==(Mat2 const &) const = default;
  auto operator<=>(Mat2 const &) const = default;
};

/// All x in [1, p) with x^k = 1 mod p, ascending.
std::vector<std::uint32_t> roots_of_unity(std::uint32_t p, std::uint32_t k);

/// Elements of exact multiplicative order k, ascending.
std::vector<std::uint32_t> primitive_roots_of_unity(std::uint32_t p, std::uint32_t k);

/// Square roots (r, p - r) of c with r <= p - r, or nothing if c is a non-residue.
std::optional<std::pair<std::uint32_t, std::uint32_t>> sqrt_mod(std::uint32_t p, std::int64_t c);

/// Smallest generator of GF(p)^*.
std::uint32_t primitive_root(std::uint32_t p);

/// p mod 8 for an odd prime p.
std::uint32_t residue_class_mod8(std::uint32_t p);

/// Multiplicative closure of `gens` in GL(2, p), sorted. Throws SingularMatrix
/// or LimitExceeded.
std::vector<Mat2> mat2_group(std::uint32_t p, std::vector<Mat2> const &gens, std::size_t max_order);

} // namespace octoprime::modular
