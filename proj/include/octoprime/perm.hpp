#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace octoprime {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65536;

/// Bijection on 0..degree-1. Composition is left to right: (x * y) applies x
/// first, so points are acted on from the right.
class Perm
{
public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm from_images(std::vector<std::uint32_t> const &images);
  /// 1-based cycle notation, e.g. "(1,2)(3,6,7,4,5,8)". "()" is the identity.
  static Perm parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return img_.size(); }
  Point operator[](std::size_t i) const noexcept { return img_[i]; }
  std::span<Point const> images() const noexcept { return img_; }

  Perm operator*(Perm const &other) const;
  Perm inverse() const;
  Perm pow(std::int64_t n) const;
  /// b^-1 * this * b
  Perm conjugate_by(Perm const &b) const;

  std::uint64_t order() const;
  bool is_identity() const noexcept;

  /// 1-based cycle notation without fixed points.
  std::string to_cycles() const;

  /// Same action shifted by `offset` inside a larger degree; other points fixed.
  Perm embedded(std::size_t degree, std::size_t offset) const;

  bool operator==(Perm const &) const = default;
  auto operator<=>(Perm const &) const = default;

private:
  std::vector<Point> img_;
};

/// Least n >= 1 with x^n = 1.
std::uint64_t element_order(Perm const &x);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

} // namespace octoprime
