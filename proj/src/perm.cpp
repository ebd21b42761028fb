#include "octoprime/perm.hpp"

#include <cctype>
#include <numeric>

#include "octoprime/errors.hpp"

namespace octoprime {

namespace {

void check_degree(std::size_t degree)
{
  if (degree > kMaxDegree)
    throw LimitExceeded("degree " + std::to_string(degree) + " exceeds " + std::to_string(kMaxDegree));
}

} // namespace

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

Perm::Perm(std::size_t degree)
{
  check_degree(degree);
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images))
{
  check_degree(img_.size());
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x])
      throw InvalidArgument("image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_images(std::vector<std::uint32_t> const &images)
{
  check_degree(images.size());
  std::vector<Point> pts(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size())
      throw InvalidArgument("image out of range");
    pts[i] = static_cast<Point>(images[i]);
  }
  return Perm(std::move(pts));
}

Perm Perm::parse_cycles(std::string_view text, std::size_t degree)
{
  Perm result(degree);
  std::vector<Point> &img = result.img_;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<std::size_t> cycle;
    skip();
    while (i < text.size() && text[i] != ')') {
      std::size_t const start = i;
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (i == start)
        throw ParseError("expected point in cycle notation", i);
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range", start);
      if (used[v - 1])
        throw ParseError("point " + std::to_string(v) + " repeated", start);
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip();
      }
    }
    if (i >= text.size())
      throw ParseError("unterminated cycle", i);
    ++i;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    skip();
  }
  return result;
}

Perm Perm::operator*(Perm const &other) const
{
  if (other.degree() != degree())
    throw InvalidArgument("degree mismatch in product");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[i] = other.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const
{
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(std::int64_t n) const
{
  if (n < 0)
    return inverse().pow(-n);
  Perm result(degree());
  Perm base = *this;
  while (n) {
    if (n & 1)
      result = result * base;
    n >>= 1;
    if (n)
      base = base * base;
  }
  return result;
}

Perm Perm::conjugate_by(Perm const &b) const
{
  // x -> b(this(b^-1(x)))
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[b.img_[i]] = b.img_[img_[i]];
  return r;
}

std::uint64_t Perm::order() const
{
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    result = lcm_u64(result, len);
  }
  return result;
}

bool Perm::is_identity() const noexcept
{
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i)
      return false;
  }
  return true;
}

std::string Perm::to_cycles() const
{
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i)
        out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm Perm::embedded(std::size_t degree, std::size_t offset) const
{
  if (offset + img_.size() > degree)
    throw InvalidArgument("embedding does not fit");
  Perm r(degree);
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[offset + i] = static_cast<Point>(offset + img_[i]);
  return r;
}

std::uint64_t element_order(Perm const &x) { return x.order(); }

} // namespace octoprime
