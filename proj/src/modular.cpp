#include "octoprime/modular.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "octoprime/errors.hpp"

namespace octoprime::modular {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p)
{
  auto r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void require_odd_prime(std::uint32_t p)
{
  if (p < 3 || !is_prime(p))
    throw InvalidArgument("modulus " + std::to_string(p) + " is not an odd prime");
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p)
{
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1u)
      result = result * base % p;
    base = base * base % p;
    exp >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t p)
{
  a %= p;
  if (a == 0)
    throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t x = a;
  std::uint32_t n = 1;
  while (x != 1) {
    x = x * a % p;
    ++n;
  }
  return n;
}

FpElem::FpElem(std::int64_t value, std::uint32_t p) : value_(0), p_(p)
{
  require_odd_prime(p);
  value_ = reduce(value, p);
}

FpElem FpElem::operator+(FpElem other) const { return {static_cast<std::int64_t>(value_) + other.value_, p_}; }
FpElem FpElem::operator-(FpElem other) const { return {static_cast<std::int64_t>(value_) - other.value_, p_}; }
FpElem FpElem::operator*(FpElem other) const
{
  return {static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * other.value_ % p_), p_};
}
FpElem FpElem::operator/(FpElem other) const { return *this * other.inverse(); }
FpElem FpElem::operator-() const { return {-static_cast<std::int64_t>(value_), p_}; }

FpElem FpElem::pow(std::int64_t exp) const
{
  if (exp < 0)
    return inverse().pow(-exp);
  return {pow_mod(value_, static_cast<std::uint64_t>(exp), p_), p_};
}

FpElem FpElem::inverse() const
{
  if (value_ == 0)
    throw InvalidArgument("inverse of zero in GF(p)");
  return {pow_mod(value_, p_ - 2, p_), p_};
}

std::uint32_t smallest_nonresidue(std::uint32_t p)
{
  require_odd_prime(p);
  for (std::uint32_t c = 2; c < p; ++c) {
    if (pow_mod(c, (p - 1) / 2, p) == p - 1)
      return c;
  }
  throw InvalidArgument("no quadratic non-residue");
}

Fp2Elem::Fp2Elem(std::int64_t c0, std::int64_t c1, std::uint32_t p)
  : c0_(reduce(c0, p)), c1_(reduce(c1, p)), p_(p), nonresidue_(smallest_nonresidue(p))
{}

Fp2Elem Fp2Elem::operator+(Fp2Elem const &o) const
{
  return {static_cast<std::int64_t>(c0_) + o.c0_, static_cast<std::int64_t>(c1_) + o.c1_, p_};
}

Fp2Elem Fp2Elem::operator-(Fp2Elem const &o) const
{
  return {static_cast<std::int64_t>(c0_) - o.c0_, static_cast<std::int64_t>(c1_) - o.c1_, p_};
}

Fp2Elem Fp2Elem::operator*(Fp2Elem const &o) const
{
  std::uint64_t const p = p_;
  std::uint64_t const r0 = (static_cast<std::uint64_t>(c0_) * o.c0_ +
                            static_cast<std::uint64_t>(c1_) * o.c1_ % p * nonresidue_) % p;
  std::uint64_t const r1 = (static_cast<std::uint64_t>(c0_) * o.c1_ +
                            static_cast<std::uint64_t>(c1_) * o.c0_) % p;
  return {static_cast<std::int64_t>(r0), static_cast<std::int64_t>(r1), p_};
}

Fp2Elem Fp2Elem::inverse() const
{
  if (is_zero())
    throw InvalidArgument("inverse of zero in GF(p^2)");
  // (c0 + c1 t)^-1 = (c0 - c1 t) / (c0^2 - n c1^2)
  std::uint64_t const p = p_;
  std::uint64_t const norm = (static_cast<std::uint64_t>(c0_) * c0_ % p +
                              p - static_cast<std::uint64_t>(c1_) * c1_ % p * nonresidue_ % p) % p;
  std::uint64_t const inv = pow_mod(norm, p - 2, p_);
  return {static_cast<std::int64_t>(c0_ * inv % p),
          -static_cast<std::int64_t>(c1_ * inv % p), p_};
}

Fp2Elem Fp2Elem::operator/(Fp2Elem const &o) const { return *this * o.inverse(); }

Fp2Elem Fp2Elem::pow(std::uint64_t exp) const
{
  Fp2Elem result(1, 0, p_);
  Fp2Elem base = *this;
  while (exp) {
    if (exp & 1u)
      result = result * base;
    base = base * base;
    exp >>= 1u;
  }
  return result;
}

Fp2Elem Fp2Elem::frobenius() const { return pow(p_); }

Fp2Elem Fp2Elem::from_index(std::uint32_t index, std::uint32_t p)
{
  return {index % p, index / p, p};
}

Mat2::Mat2(std::uint32_t p_, std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11)
  : p(p_), m{reduce(m00, p_), reduce(m01, p_), reduce(m10, p_), reduce(m11, p_)}
{}

std::uint32_t Mat2::det() const
{
  std::uint64_t const a = static_cast<std::uint64_t>(m[0]) * m[3] % p;
  std::uint64_t const b = static_cast<std::uint64_t>(m[1]) * m[2] % p;
  return static_cast<std::uint32_t>((a + p - b) % p);
}

std::uint32_t Mat2::trace() const { return (m[0] + m[3]) % p; }

bool Mat2::is_identity() const { return m[0] == 1 % p && m[1] == 0 && m[2] == 0 && m[3] == 1 % p; }

Mat2 Mat2::operator*(Mat2 const &o) const
{
  std::uint64_t const q = p;
  Mat2 r;
  r.p = p;
  r.m[0] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(m[0]) * o.m[0] + static_cast<std::uint64_t>(m[1]) * o.m[2]) % q);
  r.m[1] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(m[0]) * o.m[1] + static_cast<std::uint64_t>(m[1]) * o.m[3]) % q);
  r.m[2] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(m[2]) * o.m[0] + static_cast<std::uint64_t>(m[3]) * o.m[2]) % q);
  r.m[3] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(m[2]) * o.m[1] + static_cast<std::uint64_t>(m[3]) * o.m[3]) % q);
  return r;
}

Mat2 Mat2::operator-() const
{
  return {p, -static_cast<std::int64_t>(m[0]), -static_cast<std::int64_t>(m[1]),
          -static_cast<std::int64_t>(m[2]), -static_cast<std::int64_t>(m[3])};
}

Mat2 Mat2::inverse() const
{
  auto const d = det();
  if (d == 0)
    throw SingularMatrix("matrix " + to_string() + " is singular mod " + std::to_string(p));
  std::int64_t const di = pow_mod(d, p - 2, p);
  return {p, m[3] * di, -static_cast<std::int64_t>(m[1]) * di, -static_cast<std::int64_t>(m[2]) * di, m[0] * di};
}

Mat2 Mat2::pow(std::int64_t exp) const
{
  if (exp < 0)
    return inverse().pow(-exp);
  Mat2 result = identity(p);
  Mat2 base = *this;
  auto e = static_cast<std::uint64_t>(exp);
  while (e) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::uint64_t Mat2::order() const
{
  if (!invertible())
    throw SingularMatrix("order of singular matrix " + to_string());
  Mat2 x = *this;
  std::uint64_t n = 1;
  while (!x.is_identity()) {
    x = x * *this;
    ++n;
  }
  return n;
}

std::pair<std::uint32_t, std::uint32_t> Mat2::apply(std::uint32_t x, std::uint32_t y) const
{
  std::uint64_t const q = p;
  return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * m[0] + static_cast<std::uint64_t>(y) * m[2]) % q),
          static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * m[1] + static_cast<std::uint64_t>(y) * m[3]) % q)};
}

std::string Mat2::to_string() const
{
  std::ostringstream os;
  os << '(' << m[0] << ',' << m[1] << ';' << m[2] << ',' << m[3] << ')';
  return os.str();
}

std::vector<std::uint32_t> roots_of_unity(std::uint32_t p, std::uint32_t k)
{
  require_odd_prime(p);
  if (k == 0)
    throw InvalidArgument("k must be positive");
  std::vector<std::uint32_t> roots;
  for (std::uint32_t x = 1; x < p; ++x) {
    if (pow_mod(x, k, p) == 1)
      roots.push_back(x);
  }
  return roots;
}

std::vector<std::uint32_t> primitive_roots_of_unity(std::uint32_t p, std::uint32_t k)
{
  std::vector<std::uint32_t> out;
  for (auto x : roots_of_unity(p, k)) {
    if (multiplicative_order(x, p) == k)
      out.push_back(x);
  }
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> sqrt_mod(std::uint32_t p, std::int64_t c)
{
  require_odd_prime(p);
  auto const target = reduce(c, p);
  for (std::uint32_t r = 0; r <= p / 2; ++r) {
    if (static_cast<std::uint64_t>(r) * r % p == target)
      return std::pair{r, (p - r) % p};
  }
  return std::nullopt;
}

std::uint32_t primitive_root(std::uint32_t p)
{
  require_odd_prime(p);
  for (std::uint32_t g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1)
      return g;
  }
  return 1; // unreachable for odd primes
}

std::uint32_t residue_class_mod8(std::uint32_t p)
{
  require_odd_prime(p);
  return p % 8;
}

std::vector<Mat2> mat2_group(std::uint32_t p, std::vector<Mat2> const &gens, std::size_t max_order)
{
  require_odd_prime(p);
  for (auto const &g : gens) {
    if (g.p != p)
      throw InvalidArgument("generator modulus mismatch");
    if (!g.invertible())
      throw SingularMatrix("generator " + g.to_string() + " is singular");
  }
  std::set<Mat2> seen{Mat2::identity(p)};
  std::vector<Mat2> frontier{Mat2::identity(p)};
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (auto const &x : frontier) {
      for (auto const &g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > max_order)
            throw LimitExceeded("matrix group exceeds " + std::to_string(max_order) + " elements");
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

} // namespace octoprime::modular
