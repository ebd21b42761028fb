#include "octoprime/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "octoprime/coset_enum.hpp"
#include "octoprime/errors.hpp"
#include "octoprime/gl2search.hpp"
#include "octoprime/presentation.hpp"

namespace octoprime::zoo {

using modular::Mat2;

namespace {

constexpr char kPres216[] =
  "a^2=b^2=c^3=(a,c)=(a*d)^2=(b,c)=c*d^2*(c^{-1})*d=a*b*a*d*b*(d^{-1})=(a*b)^2*(d^{-1})*b*d=1";
constexpr char kPres432[] =
  "a^4=b^2=c^3=d^2=(a,c)=(a,d)=(a,d)=(b,d)=(c*d)^2=(a*b)^3=(b*c)^2*(b*(c^{-1}))^2=a*b*a*c*b*c*a*b*c=1";
constexpr char kPresA22[] = "a^3=b^4=(a,b^2)=a*b*(a*(b^{-1}))^3=1";

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t totient(std::uint64_t n)
{
  std::uint64_t r = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0)
        n /= q;
      r -= r / q;
    }
  }
  if (n > 1)
    r -= r / n;
  return r;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::int64_t param(std::vector<std::int64_t> const &params, std::size_t i, char const *what)
{
  if (i >= params.size())
    throw InvalidArgument(std::string("missing parameter ") + what);
  return params[i];
}

std::uint32_t prime_param(std::vector<std::int64_t> const &params, std::size_t i)
{
  auto const p = param(params, i, "p");
  if (p < 2 || p > 65535 || !modular::is_prime(static_cast<std::uint64_t>(p)))
    throw InvalidArgument("not a prime: " + std::to_string(p));
  return static_cast<std::uint32_t>(p);
}

std::uint32_t size_param(std::vector<std::int64_t> const &params, std::size_t i, std::int64_t lo, std::int64_t hi)
{
  auto const n = param(params, i, "n");
  if (n < lo || n > hi)
    throw InvalidArgument("parameter " + std::to_string(n) + " out of range [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]");
  return static_cast<std::uint32_t>(n);
}

std::string const &name_text(GroupName n)
{
  static std::vector<std::string> const names{
    "Cyclic", "ElemAbelian", "Dihedral",  "Quaternion8", "C4xC2",       "C8",          "Sym",
    "Alt",    "GL2",         "SL23",      "GL32",        "Hol_C",       "Hol_Cp2",     "H_pn",
    "SL23_at_C", "Coxeter234", "Frobenius56", "Complete168", "Complete216", "Complete432"};
  return names[static_cast<std::size_t>(n)];
}

void expect_arity(Spec const &s, std::size_t n)
{
  if (s.params.size() != n)
    throw InvalidArgument(name_text(s.name) + " takes " + std::to_string(n) + " parameter(s)");
}

Perm cycle(std::size_t n)
{
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Perm::from_images(img);
}

Perm transposition(std::size_t n, std::size_t a, std::size_t b)
{
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::swap(img[a], img[b]);
  return Perm::from_images(img);
}

PermGroup cyclic(std::uint32_t n)
{
  PermGroup g(n, {cycle(n)}, "C_" + std::to_string(n));
  g.set_known_order(n);
  return g;
}

PermGroup elem_abelian(std::uint32_t p, std::uint32_t k)
{
  std::vector<PermGroup> f(k, cyclic(p));
  auto g = direct_product(f);
  g.set_name("E(" + std::to_string(p) + "^" + std::to_string(k) + ")");
  return g;
}

PermGroup dihedral(std::uint32_t n)
{
  if (n == 2)
    return elem_abelian(2, 2);
  std::vector<std::uint32_t> s(n);
  for (std::uint32_t i = 0; i < n; ++i)
    s[i] = (n - i) % n;
  return PermGroup(n, {cycle(n), Perm::from_images(s)}, "D_" + std::to_string(n));
}

PermGroup symmetric(std::uint32_t n)
{
  if (n == 1)
    return PermGroup(1, {Perm(1)}, "S_1");
  std::vector<Perm> gens{cycle(n)};
  if (n > 2)
    gens.push_back(transposition(n, 0, 1));
  return PermGroup(n, gens, "S_" + std::to_string(n));
}

PermGroup alternating(std::uint32_t n)
{
  if (n < 3)
    return PermGroup(std::max<std::uint32_t>(n, 1), {Perm(std::max<std::uint32_t>(n, 1))}, "A_" + std::to_string(n));
  // 3-cycles (1,2,k) generate A_n.
  std::vector<Perm> gens;
  for (std::uint32_t k = 2; k < n; ++k) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    img[0] = 1;
    img[1] = k;
    img[k] = 0;
    gens.push_back(Perm::from_images(img));
  }
  return PermGroup(n, gens, "A_" + std::to_string(n));
}

// x -> a*x + b on Z_n with a running over a generating set of the units.
PermGroup hol_c(std::uint32_t n)
{
  std::vector<Perm> gens{cycle(n)};
  std::vector<std::uint32_t> units{1};
  auto in_units = [&](std::uint32_t u) { return std::find(units.begin(), units.end(), u) != units.end(); };
  for (std::uint32_t u = 2; u < n; ++u) {
    if (gcd_u64(u, n) != 1 || in_units(u))
      continue;
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t x = 0; x < n; ++x)
      img[x] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * u % n);
    gens.push_back(Perm::from_images(img));
    // close the unit subgroup under multiplication by u
    for (std::size_t i = 0; i < units.size(); ++i) {
      auto const v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(units[i]) * u % n);
      if (!in_units(v))
        units.push_back(v);
    }
  }
  PermGroup g(n, gens, "Hol(C_" + std::to_string(n) + ")");
  g.set_known_order(static_cast<std::uint64_t>(n) * totient(n));
  return g;
}

std::vector<Mat2> gl2_generators(std::uint32_t p)
{
  return {Mat2::diag(p, modular::primitive_root(p), 1), Mat2(p, 1, 1, 0, 1), Mat2(p, 0, 1, 1, 0)};
}

std::uint64_t gl2_order(std::uint64_t p) { return (p * p - 1) * (p * p - p); }

// GF(p^2) maps x -> a*x^t + b.
PermGroup h_p2(std::uint32_t p)
{
  using modular::Fp2Elem;
  std::uint32_t const q = p * p;
  Fp2Elem omega(0, 0, p);
  for (std::uint32_t i = 1; i < q; ++i) {
    auto e = Fp2Elem::from_index(i, p);
    std::uint64_t const n = q - 1;
    bool primitive = true;
    for (std::uint64_t r = 2; r <= n && primitive; ++r) {
      if (n % r == 0 && modular::is_prime(r) && e.pow(n / r) == Fp2Elem(1, 0, p))
        primitive = false;
    }
    if (primitive) {
      omega = e;
      break;
    }
  }
  std::vector<std::uint32_t> mul(q), add(q), frob(q);
  Fp2Elem const one(1, 0, p);
  for (std::uint32_t i = 0; i < q; ++i) {
    auto e = Fp2Elem::from_index(i, p);
    mul[i] = (e * omega).index();
    add[i] = (e + one).index();
    frob[i] = e.frobenius().index();
  }
  PermGroup g(q, {Perm::from_images(mul), Perm::from_images(add), Perm::from_images(frob)},
              "H(" + std::to_string(p) + "^2)");
  g.set_known_order(static_cast<std::uint64_t>(q) * (q - 1) * 2);
  return g;
}

// AGL(1,8): GF(8) = GF(2)[x]/(x^3+x+1), maps v -> a*v + b.
PermGroup frobenius56()
{
  auto gf8_mul = [](std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    for (int i = 0; i < 3; ++i) {
      if (b & (1u << i))
        r ^= a << i;
    }
    for (int i = 4; i >= 3; --i) {
      if (r & (1u << i))
        r ^= 0b1011u << (i - 3);
    }
    return r;
  };
  std::vector<std::uint32_t> mul(8), add(8);
  for (std::uint32_t v = 0; v < 8; ++v) {
    mul[v] = gf8_mul(v, 2);
    add[v] = v ^ 1u;
  }
  PermGroup g(8, {Perm::from_images(mul), Perm::from_images(add)}, "Frobenius56");
  g.set_known_order(56);
  return g;
}

// GL(3,2) on the 7 nonzero vectors of GF(2)^3, vector v at point v-1.
PermGroup gl32()
{
  auto act = [](auto f) {
    std::vector<std::uint32_t> img(7);
    for (std::uint32_t v = 1; v <= 7; ++v)
      img[v - 1] = f(v) - 1;
    return Perm::from_images(img);
  };
  // e1 -> e1 + e2 (row vectors, bit i = coordinate i), and the coordinate shift.
  auto transvection = act([](std::uint32_t v) { return (v & 1u) ? (v ^ 2u) : v; });
  auto shift = act([](std::uint32_t v) { return ((v << 1) | (v >> 2)) & 7u; });
  PermGroup g(7, {transvection, shift}, "GL(3,2)");
  g.set_known_order(168);
  return g;
}

PermGroup from_presentation(char const *text, std::string name, std::uint64_t expected)
{
  auto g = reduce_degree(enumerate_group(parse_presentation(text)));
  if (g.order() != expected)
    throw Error(name + ": presentation gave order " + std::to_string(g.order()));
  PermGroup out(g.degree(), g.generators(), std::move(name));
  out.set_known_order(expected);
  return out;
}

} // namespace

std::vector<Mat2> quaternion_matrices(std::uint32_t p)
{
  if (p < 3 || !modular::is_prime(p))
    throw InvalidArgument("quaternion image needs an odd prime");
  for (std::uint32_t x = 0; x < p; ++x) {
    auto const rhs = static_cast<std::int64_t>(p) - 1 - static_cast<std::int64_t>(static_cast<std::uint64_t>(x) * x % p);
    if (auto r = modular::sqrt_mod(p, rhs))
      return {Mat2(p, x, r->first, r->first, -static_cast<std::int64_t>(x)), Mat2(p, 0, 1, -1, 0)};
  }
  throw NotFound("no solution of x^2 + y^2 = -1");
}

std::vector<Mat2> sl23_at_c_matrices(std::uint32_t p)
{
  if (p < 3 || !modular::is_prime(p))
    throw InvalidArgument("SL23_at_C needs an odd prime");
  auto const z = modular::primitive_root(p);
  if (p % 8 == 1) {
    auto const roots = modular::primitive_roots_of_unity(p, 8);
    auto const s = *std::min_element(roots.begin(), roots.end());
    auto const t = modular::pow_mod(s, p - 2, p);
    return {Mat2(p, 0, s, t, 0), Mat2(p, -1, 1, -1, 0), Mat2::scalar(p, z)};
  }
  auto const q = quaternion_matrices(p);
  // Normalizer by direct scan; Aut(Q_2) = S_4 is realized, so it has 24(p-1) elements.
  auto const image = modular::mat2_group(p, q, 8);
  std::vector<Mat2> normalizer;
  for (std::uint32_t m00 = 0; m00 < p; ++m00)
    for (std::uint32_t m01 = 0; m01 < p; ++m01)
      for (std::uint32_t m10 = 0; m10 < p; ++m10)
        for (std::uint32_t m11 = 0; m11 < p; ++m11) {
          Mat2 const g(p, m00, m01, m10, m11);
          if (!g.invertible())
            continue;
          auto const gi = g.inverse();
          bool ok = true;
          for (auto const &x : q) {
            auto const c = gi * x * g;
            if (std::find(image.begin(), image.end(), c) == image.end()) {
              ok = false;
              break;
            }
          }
          if (ok)
            normalizer.push_back(g);
        }
  // Greedy generating set, starting from the centre.
  std::vector<Mat2> gens{Mat2::scalar(p, z)};
  auto current = modular::mat2_group(p, gens, normalizer.size());
  std::sort(normalizer.begin(), normalizer.end(),
            [](Mat2 const &a, Mat2 const &b) { return a.order() > b.order() || (a.order() == b.order() && a.m < b.m); });
  for (auto const &g : normalizer) {
    if (current.size() == normalizer.size())
      break;
    if (std::find(current.begin(), current.end(), g) != current.end())
      continue;
    gens.push_back(g);
    current = modular::mat2_group(p, gens, normalizer.size());
  }
  return gens;
}

PermGroup linear_group(std::uint32_t p, std::vector<Mat2> const &gens, std::string name)
{
  std::uint32_t const n = p * p - 1;
  // nonzero vector (x,y) at point x + p*y - 1
  std::vector<Perm> perms;
  for (auto const &m : gens) {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      auto const [x, y] = m.apply((i + 1) % p, (i + 1) / p);
      img[i] = x + p * y - 1;
    }
    perms.push_back(Perm::from_images(img));
  }
  return PermGroup(n, perms, std::move(name));
}

std::uint64_t order(Spec const &s)
{
  auto const &ps = s.params;
  auto u = [&](std::size_t i) { return static_cast<std::uint64_t>(param(ps, i, "n")); };
  switch (s.name) {
  case GroupName::Cyclic: return u(0);
  case GroupName::ElemAbelian: {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < u(1); ++i)
      r *= u(0);
    return r;
  }
  case GroupName::Dihedral: return 2 * u(0);
  case GroupName::Quaternion8:
  case GroupName::C4xC2:
  case GroupName::C8: return 8;
  case GroupName::Sym: return factorial(u(0));
  case GroupName::Alt: return u(0) < 2 ? 1 : factorial(u(0)) / 2;
  case GroupName::GL2: return gl2_order(u(0));
  case GroupName::SL23: return 24;
  case GroupName::GL32: return 168;
  case GroupName::Hol_C: return u(0) * totient(u(0));
  case GroupName::Hol_Cp2: return u(0) * u(0) * gl2_order(u(0));
  case GroupName::H_pn: {
    auto const q = u(1) == 1 ? u(0) : u(0) * u(0);
    return q * (q - 1) * u(1);
  }
  case GroupName::SL23_at_C: return 24 * (u(0) - 1);
  case GroupName::Coxeter234: return 48;
  case GroupName::Frobenius56: return 56;
  case GroupName::Complete168: return 168;
  case GroupName::Complete216: return 216;
  case GroupName::Complete432: return 432;
  }
  return 0;
}

PermGroup make(Spec const &s)
{
  auto const &ps = s.params;
  PermGroup g;
  switch (s.name) {
  case GroupName::Cyclic:
    expect_arity(s, 1);
    g = cyclic(size_param(ps, 0, 1, 65535));
    break;
  case GroupName::ElemAbelian:
    expect_arity(s, 2);
    g = elem_abelian(prime_param(ps, 0), size_param(ps, 1, 1, 8));
    break;
  case GroupName::Dihedral:
    expect_arity(s, 1);
    g = dihedral(size_param(ps, 0, 2, 65535));
    break;
  case GroupName::Quaternion8:
    expect_arity(s, 0);
    g = PermGroup(8, {Perm::parse_cycles("(1,2,3,4)(5,6,7,8)", 8), Perm::parse_cycles("(1,5,3,7)(2,8,4,6)", 8)});
    break;
  case GroupName::C4xC2:
    expect_arity(s, 0);
    g = PermGroup(6, {Perm::parse_cycles("(1,2,3,4)", 6), Perm::parse_cycles("(5,6)", 6)});
    break;
  case GroupName::C8:
    expect_arity(s, 0);
    g = cyclic(8);
    break;
  case GroupName::Sym:
    expect_arity(s, 1);
    g = symmetric(size_param(ps, 0, 1, 12));
    break;
  case GroupName::Alt:
    expect_arity(s, 1);
    g = alternating(size_param(ps, 0, 1, 12));
    break;
  case GroupName::GL2: {
    expect_arity(s, 1);
    auto const p = prime_param(ps, 0);
    g = linear_group(p, gl2_generators(p));
    break;
  }
  case GroupName::SL23:
    expect_arity(s, 0);
    g = linear_group(3, {Mat2(3, 1, 1, 0, 1), Mat2(3, 1, 0, 1, 1)});
    break;
  case GroupName::GL32:
    expect_arity(s, 0);
    g = gl32();
    break;
  case GroupName::Hol_C:
    expect_arity(s, 1);
    g = hol_c(size_param(ps, 0, 1, 65535));
    break;
  case GroupName::Hol_Cp2: {
    expect_arity(s, 1);
    auto const p = prime_param(ps, 0);
    g = semidirect_p2(p, gl2_generators(p));
    break;
  }
  case GroupName::H_pn: {
    expect_arity(s, 2);
    auto const p = prime_param(ps, 0);
    auto const n = size_param(ps, 1, 1, 2);
    g = n == 1 ? hol_c(p) : h_p2(p);
    break;
  }
  case GroupName::SL23_at_C: {
    expect_arity(s, 1);
    auto const p = prime_param(ps, 0);
    if (p < 3)
      throw InvalidArgument("SL23_at_C needs an odd prime");
    g = linear_group(p, sl23_at_c_matrices(p));
    break;
  }
  case GroupName::Coxeter234: {
    if (ps.empty()) {
      g = from_presentation(kPresA22, "", 48);
      break;
    }
    expect_arity(s, 1);
    auto const p = prime_param(ps, 0);
    if (p < 3)
      throw InvalidArgument("Coxeter234 needs an odd prime");
    auto const r = gl2search::search_special(p);
    if (r.solutions.empty())
      throw NotFound("no special-form <2,3,4> representation at p=" + std::to_string(p));
    auto const &t = r.solutions.front().tuple;
    g = linear_group(p, {gl2search::matrix_a(p), Mat2(p, 1, t[0], t[1], -1)});
    break;
  }
  case GroupName::Frobenius56:
    expect_arity(s, 0);
    g = frobenius56();
    break;
  case GroupName::Complete168:
    expect_arity(s, 0);
    g = PermGroup(8, {Perm::parse_cycles("(1,2)(3,6,7,4,5,8)", 8), Perm::parse_cycles("(1,7,2,6,4,5)(3,8)", 8)});
    break;
  case GroupName::Complete216:
    expect_arity(s, 0);
    g = from_presentation(kPres216, "", 216);
    break;
  case GroupName::Complete432:
    expect_arity(s, 0);
    g = from_presentation(kPres432, "", 432);
    break;
  }
  g.set_name(token(s));
  if (!g.order_known())
    g.set_known_order(order(s));
  return g;
}

PermGroup make(GroupName name, std::vector<std::int64_t> const &params) { return make(Spec{name, params}); }

std::string token(Spec const &s)
{
  auto const &ps = s.params;
  auto n = [&](std::size_t i) { return i < ps.size() ? std::to_string(ps[i]) : std::string("?"); };
  switch (s.name) {
  case GroupName::Cyclic: return "C_" + n(0);
  case GroupName::ElemAbelian: return "E(" + n(0) + "^" + n(1) + ")";
  case GroupName::Dihedral: return "D_" + n(0);
  case GroupName::Quaternion8: return "Q_2";
  case GroupName::C4xC2: return "C_4xC_2";
  case GroupName::C8: return "C_8";
  case GroupName::Sym: return "S_" + n(0);
  case GroupName::Alt: return "A_" + n(0);
  case GroupName::GL2: return "GL(2," + n(0) + ")";
  case GroupName::SL23: return "SL(2,3)";
  case GroupName::GL32: return "GL(3,2)";
  case GroupName::Hol_C: return "Hol(C_" + n(0) + ")";
  case GroupName::Hol_Cp2: return "Hol(C_" + n(0) + "xC_" + n(0) + ")";
  case GroupName::H_pn: return "H(" + n(0) + "^" + n(1) + ")";
  case GroupName::SL23_at_C: return "SL(2,3)@C_" + std::to_string(ps.empty() ? 0 : ps[0] - 1) + "[p=" + n(0) + "]";
  case GroupName::Coxeter234: return ps.empty() ? "<2,3,4>" : "<2,3,4>[p=" + n(0) + "]";
  case GroupName::Frobenius56: return "Frobenius56";
  case GroupName::Complete168: return "Complete168";
  case GroupName::Complete216: return "Complete216";
  case GroupName::Complete432: return "Complete432";
  }
  return "?";
}

Spec parse_token(std::string_view text)
{
  std::string t;
  for (char c : text) {
    if (c != ' ' && c != '_' && c != '{' && c != '}')
      t.push_back(c);
  }
  std::smatch m;
  auto num = [&](int i) { return static_cast<std::int64_t>(std::stoll(m[i].str())); };
  auto is = [&](char const *re) { return std::regex_match(t, m, std::regex(re)); };
  try {
    if (is(R"(C(\d+))"))
      return num(1) == 8 ? Spec{GroupName::C8, {}} : Spec{GroupName::Cyclic, {num(1)}};
    if (is(R"(E(\d+))")) {
      auto const v = num(1);
      for (std::int64_t p : {2, 3, 5, 7}) {
        std::int64_t k = 0, r = v;
        while (r % p == 0) {
          r /= p;
          ++k;
        }
        if (r == 1 && k > 0)
          return {GroupName::ElemAbelian, {p, k}};
      }
    }
    if (is(R"(E\((\d+)\^(\d+)\))") || is(R"((\d+)\^(\d+))"))
      return {GroupName::ElemAbelian, {num(1), num(2)}};
    if (is(R"(D(\d+))"))
      return {GroupName::Dihedral, {num(1)}};
    if (is(R"(Q2|Q8|Quaternion8)"))
      return {GroupName::Quaternion8, {}};
    if (is(R"(C4xC2|C4\*C2)"))
      return {GroupName::C4xC2, {}};
    if (is(R"(S(\d+)|Sym\((\d+)\))"))
      return {GroupName::Sym, {std::stoll(m[1].matched ? m[1].str() : m[2].str())}};
    if (is(R"(A(\d+)|Alt\((\d+)\))"))
      return {GroupName::Alt, {std::stoll(m[1].matched ? m[1].str() : m[2].str())}};
    if (is(R"(GL\(2,(\d+)\))"))
      return {GroupName::GL2, {num(1)}};
    if (is(R"(SL\(2,3\)|SL23)"))
      return {GroupName::SL23, {}};
    if (is(R"(GL\(3,2\)|GL32)"))
      return {GroupName::GL32, {}};
    if (is(R"(Hol\(C(\d+)\)|HolC\((\d+)\))"))
      return {GroupName::Hol_C, {std::stoll(m[1].matched ? m[1].str() : m[2].str())}};
    if (is(R"(Hol\(C(\d+)xC(\d+)\))") && m[1] == m[2])
      return {GroupName::Hol_Cp2, {num(1)}};
    if (is(R"(HolCp2\((\d+)\))"))
      return {GroupName::Hol_Cp2, {num(1)}};
    if (is(R"(H\((\d+)\^(\d+)\)|Hpn\((\d+),(\d+)\))")) {
      if (m[1].matched)
        return {GroupName::H_pn, {num(1), num(2)}};
      return {GroupName::H_pn, {num(3), num(4)}};
    }
    if (is(R"(SL\(2,3\)@C(\d+)\[p=(\d+)\])"))
      return {GroupName::SL23_at_C, {num(2)}};
    if (is(R"(SL23atC\((\d+)\))"))
      return {GroupName::SL23_at_C, {num(1)}};
    if (is(R"(<2,3,4>|Coxeter234)"))
      return {GroupName::Coxeter234, {}};
    if (is(R"(<2,3,4>\[p=(\d+)\]|Coxeter234\((\d+)\))"))
      return {GroupName::Coxeter234, {std::stoll(m[1].matched ? m[1].str() : m[2].str())}};
    if (is(R"(Frobenius56|AGL\(1,8\))"))
      return {GroupName::Frobenius56, {}};
    if (is(R"(Complete168)"))
      return {GroupName::Complete168, {}};
    if (is(R"(Complete216)"))
      return {GroupName::Complete216, {}};
    if (is(R"(Complete432)"))
      return {GroupName::Complete432, {}};
  } catch (std::out_of_range const &) {
  }
  throw ParseError("unknown group token '" + std::string(text) + "'", 0);
}

} // namespace octoprime::zoo
