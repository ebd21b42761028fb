#include "octoprime/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "octoprime/coset_enum.hpp"
#include "octoprime/errors.hpp"
#include "octoprime/gl2search.hpp"
#include "octoprime/zoo.hpp"

namespace octoprime::catalog {

namespace {

using modular::Mat2;
using zoo::GroupName;
using C = StructureClaim;

struct TwoGroupDef
{
  std::string_view name;
  std::vector<std::string> gens;
  std::string relators;
};

std::vector<TwoGroupDef> const &two_groups()
{
  static std::vector<TwoGroupDef> const defs{
    {"C8", {"a"}, "a^8=1"},
    {"C4xC2", {"a", "b"}, "a^4=b^2=(a,b)=1"},
    {"E8", {"a", "b", "e"}, "a^2=b^2=e^2=(a,b)=(a,e)=(b,e)=1"},
    {"D4", {"a", "b"}, "a^4=b^2=a^b*a=1"},
    {"Q2", {"a", "b"}, "a^4=b^4=a^2*b^2=a^b*a=1"},
    {"C4", {"a"}, "a^4=1"},
  };
  return defs;
}

TwoGroupDef const &two_group(std::string_view name)
{
  for (auto const &d : two_groups()) {
    if (d.name == name)
      return d;
  }
  throw InvalidArgument("unknown 2-group " + std::string(name));
}

std::vector<std::string> const kOrder8{"C8", "C4xC2", "E8", "D4", "Q2"};

// (2-group, generator inverting the odd part)
std::vector<std::pair<std::string, std::string>> const kC2Kernels{
  {"C8", "a"}, {"C4xC2", "a"}, {"C4xC2", "b"}, {"E8", "a"}, {"D4", "a"}, {"D4", "b"}, {"Q2", "b"},
};

std::vector<std::pair<std::string, std::string>> const kC2xC2{
  {"C4xC2", "[a,b]"}, {"C4xC2", "[ab,b]"}, {"E8", "[a,b]"}, {"D4", "[a,b]"}, {"D4", "[ab,a]"}, {"Q2", "[ab,a]"},
};

std::vector<std::string> const kC4Split{"x1", "x-1", "xx", "xinv"};

struct Special
{
  OrderClass cls;
  std::string two_group;
  Image image;
  std::string variant;
  std::uint32_t p;
  std::vector<std::string> gens;
  std::string relators;
};

std::string const kA4xC2 = "a^2=b^2=e^2=(a,b)=(a,e)=(b,e)=c^3=a^c*b^-1=b^c*b^-1*a^-1=(e,c)=1";
std::string const kSL23 = "a^4=b^4=a^2*b^2=a^b*a=c^3=a^c*b^-1=b^c*b^-1*a^-1=1";
std::string const kF56 = "a^2=b^2=e^2=(a,b)=(a,e)=(b,e)=c^7=a^c*b^-1=b^c*e^-1=e^c*b^-1*a^-1=1";
std::string const kS4 = "a^2=b^2=(a,b)=s^2=t^3=(s*t)^2=a^t*b^-1=b^t*b^-1*a^-1=a^s*b^-1=b^s*a^-1=1";

std::vector<Special> const &specials()
{
  static std::vector<Special> const list{
    {OrderClass::order8p, "E8", Image::sylow2, "A4xC2", 3, {"a", "b", "e", "c"}, kA4xC2},
    {OrderClass::order8p, "Q2", Image::sylow2, "SL23", 3, {"a", "b", "c"}, kSL23},
    {OrderClass::order8p, "E8", Image::sylow2, "Frobenius56", 7, {"a", "b", "e", "c"}, kF56},
    {OrderClass::order8p, "D4", Image::nonnormal, "S4", 3, {"a", "b", "s", "t"}, kS4},
    {OrderClass::order8p2, "E8", Image::sylow2, "A4xC3xC2", 3, {"a", "b", "e", "c", "d"},
     "a^2=b^2=e^2=(a,b)=(a,e)=(b,e)=c^3=a^c*b^-1=b^c*b^-1*a^-1=(e,c)=d^3=(c,d)=(a,d)=(b,d)=(e,d)=1"},
    {OrderClass::order8p2, "Q2", Image::sylow2, "SL23xC3", 3, {"a", "b", "c", "d"},
     "a^4=b^4=a^2*b^2=a^b*a=c^3=a^c*b^-1=b^c*b^-1*a^-1=d^3=(c,d)=(a,d)=(b,d)=1"},
    {OrderClass::order8p2, "E8", Image::sylow2, "F56xC7", 7, {"a", "b", "e", "c", "d"},
     "a^2=b^2=e^2=(a,b)=(a,e)=(b,e)=c^7=a^c*b^-1=b^c*e^-1=e^c*b^-1*a^-1=d^7=(c,d)=(a,d)=(b,d)=(e,d)=1"},
    {OrderClass::order8p2, "D4", Image::nonnormal, "S4xC3", 3, {"a", "b", "s", "t", "c"},
     "a^2=b^2=(a,b)=s^2=t^3=(s*t)^2=a^t*b^-1=b^t*b^-1*a^-1=a^s*b^-1=b^s*a^-1=c^3=(a,c)=(b,c)=(s,c)=(t,c)=1"},
    {OrderClass::order8p2, "E8", Image::nonnormal, "A4xS3", 3, {"t", "w", "u", "v"},
     "t^3=w^3=(t*w)^2=u^2=v^3=(u*v)^2=(t,u)=(t,v)=(w,u)=(w,v)=1"},
    {OrderClass::order8p2, "D4", Image::nonnormal, "A4C3C2", 3, {"t", "v", "c", "u"},
     "t^3=v^2=(t*v)^3=c^3=(t,c)=(v,c)=u^2=t^u*t=(v,u)=c^u*c=1"},
    {OrderClass::order8p2_cyclic, "E8", Image::sylow2, "V4C9xC2", 3, {"a", "b", "e", "c"},
     "a^2=b^2=e^2=(a,b)=(a,e)=(b,e)=c^9=a^c*b^-1=b^c*b^-1*a^-1=(e,c)=1"},
    {OrderClass::order8p2_cyclic, "Q2", Image::sylow2, "Q2C9", 3, {"a", "b", "c"},
     "a^4=b^4=a^2*b^2=a^b*a=c^9=a^c*b^-1=b^c*b^-1*a^-1=1"},
    {OrderClass::order8p2_cyclic, "E8", Image::sylow2, "E8C49", 7, {"a", "b", "e", "c"},
     "a^2=b^2=e^2=(a,b)=(a,e)=(b,e)=c^49=a^c*b^-1=b^c*e^-1=e^c*b^-1*a^-1=1"},
    {OrderClass::order8p2_cyclic, "E8", Image::nonnormal, "V4D9", 3, {"a", "b", "r", "s"},
     "a^2=b^2=(a,b)=r^9=s^2=(r*s)^2=a^r*b^-1=b^r*b^-1*a^-1=a^s*b^-1=b^s*a^-1=1"},
  };
  return list;
}

Special const *find_special(CaseLabel const &l)
{
  for (auto const &s : specials()) {
    if (s.cls == l.order_class && s.two_group == l.two_group && s.image == l.image && s.variant == l.variant &&
        s.p == l.p)
      return &s;
  }
  return nullptr;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Least unit of multiplicative order k modulo n.
std::uint32_t unit_of_order(std::uint32_t n, std::uint32_t k)
{
  for (std::uint32_t u = 2; u < n; ++u) {
    if (gcd_u(u, n) != 1)
      continue;
    std::uint64_t x = u;
    std::uint32_t ord = 1;
    while (x != 1 && ord <= k) {
      x = x * u % n;
      ++ord;
    }
    if (ord == k)
      return u;
  }
  throw NotFound("no unit of order " + std::to_string(k) + " modulo " + std::to_string(n));
}

std::uint32_t smallest_sqrt(std::uint32_t p, std::int64_t c)
{
  auto r = modular::sqrt_mod(p, c);
  if (!r)
    throw NotFound(std::to_string(c) + " is not a square modulo " + std::to_string(p));
  return std::min(r->first, r->second);
}

std::uint32_t min_primitive(std::uint32_t p, std::uint32_t k)
{
  auto v = modular::primitive_roots_of_unity(p, k);
  if (v.empty())
    throw NotFound("no primitive " + std::to_string(k) + "th root of unity modulo " + std::to_string(p));
  return *std::min_element(v.begin(), v.end());
}

bool one_mod(std::uint32_t p, std::uint32_t m) { return p % m == 1; }

std::uint32_t odd_modulus(CaseLabel const &l)
{
  return l.order_class == OrderClass::order8p2_cyclic ? l.p * l.p : l.p;
}

bool has_p(OrderClass c) { return c != OrderClass::order8; }

std::vector<std::pair<OrderClass, std::string_view>> const kClassTokens{
  {OrderClass::order8, "8"},           {OrderClass::order8p, "8p"},   {OrderClass::order8p2, "8p2"},
  {OrderClass::order8p2_cyclic, "8p2cyc"}, {OrderClass::order4p2, "4p2"},
};

std::vector<std::pair<Image, std::string_view>> const kImageTokens{
  {Image::direct, "direct"}, {Image::c2, "c2-image"},     {Image::c2xc2, "c2xc2-image"}, {Image::c4, "c4-image"},
  {Image::c8, "c8-image"},   {Image::full, "full-image"}, {Image::sylow2, "sylow2"},     {Image::nonnormal, "nonnormal"},
};

std::string row_variant(int n) { return "row" + std::to_string(n); }

void add(std::vector<CaseLabel> &out, OrderClass c, std::string g, Image i, std::string v, std::uint32_t p)
{
  out.push_back(CaseLabel{c, std::move(g), i, std::move(v), p});
}

void require_odd_prime(std::uint32_t p)
{
  if (p < 3 || !modular::is_prime(p))
    throw InvalidArgument("p = " + std::to_string(p) + " is not an odd prime");
}

std::string exp_term(std::string_view gen, std::int64_t e, std::uint32_t n)
{
  auto const r = ((e % static_cast<std::int64_t>(n)) + n) % n;
  if (r == 0)
    return {};
  return "*" + std::string(gen) + "^-" + std::to_string(r);
}

} // namespace

std::string to_string(OrderClass c)
{
  for (auto const &[k, t] : kClassTokens) {
    if (k == c)
      return std::string(t);
  }
  return "?";
}

std::string to_string(Image i)
{
  for (auto const &[k, t] : kImageTokens) {
    if (k == i)
      return std::string(t);
  }
  return "?";
}

std::string format_label(CaseLabel const &l)
{
  auto s = to_string(l.order_class) + ":" + l.two_group + ":" + to_string(l.image);
  if (!l.variant.empty())
    s += ":" + l.variant;
  if (has_p(l.order_class))
    s += "@p=" + std::to_string(l.p);
  return s;
}

CaseLabel zhang_alias(std::uint32_t number, std::uint32_t p)
{
  require_odd_prime(p);
  CaseLabel l{OrderClass::order8p2, "C8", Image::c8, {}, p};
  switch (number) {
  case 2: l.image = Image::c2; l.variant = "a-one"; break;
  case 6: l.image = Image::c2; l.variant = "a-both"; break;
  case 3: l.image = Image::c4; l.variant = "x1"; break;
  case 5:
    l.image = Image::c4;
    l.variant = one_mod(p, 4) ? "x-1" : "rot";
    break;
  case 8: l.image = Image::c4; l.variant = "xx"; break;
  case 9: l.image = Image::c4; l.variant = "xinv"; break;
  case 4:
  case 7:
  case 10:
  case 11:
  case 12:
  case 13:
  case 14:
  case 15:
  case 16:
  case 17: l.variant = row_variant(static_cast<int>(number)); break;
  default: throw InvalidArgument("no C_8 case numbered " + std::to_string(number));
  }
  if (!is_valid(l))
    throw InvalidArgument("case " + std::to_string(number) + " does not occur for p = " + std::to_string(p));
  return l;
}

CaseLabel parse_label(std::string_view text)
{
  auto fail = [&](std::string const &why) -> CaseLabel { throw ParseError("label '" + std::string(text) + "': " + why, 0); };
  std::uint32_t p = 0;
  auto body = text;
  if (auto at = text.find("@p="); at != std::string_view::npos) {
    auto const num = text.substr(at + 3);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      return fail("bad prime");
    body = text.substr(0, at);
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto const colon = body.find(':', start);
    parts.emplace_back(body.substr(start, colon - start));
    if (colon == std::string_view::npos)
      break;
    start = colon + 1;
  }
  if (parts.size() == 2 && parts[0] == "zhang") {
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), n);
    if (ec != std::errc{} || ptr != parts[1].data() + parts[1].size())
      return fail("bad case number");
    if (p == 0)
      return fail("missing @p=");
    try {
      return zhang_alias(n, p);
    } catch (InvalidArgument const &e) {
      return fail(e.what());
    }
  }
  if (parts.size() < 2 || parts.size() > 4)
    return fail("expected <class>:<2-group>[:<image>][:<variant>]");
  CaseLabel l;
  bool found = false;
  for (auto const &[k, t] : kClassTokens) {
    if (parts[0] == t) {
      l.order_class = k;
      found = true;
    }
  }
  if (!found)
    return fail("unknown order class '" + parts[0] + "'");
  if (has_p(l.order_class) && p == 0)
    return fail("missing @p=");
  if (!has_p(l.order_class) && p != 0)
    return fail("order 8 takes no prime");
  l.p = p;
  l.two_group = parts[1];
  auto const &defs = two_groups();
  if (std::none_of(defs.begin(), defs.end(), [&](TwoGroupDef const &d) { return d.name == l.two_group; }))
    return fail("unknown 2-group '" + l.two_group + "'");
  std::optional<Image> image;
  std::string variant;
  if (parts.size() >= 3) {
    for (auto const &[k, t] : kImageTokens) {
      if (parts[2] == t)
        image = k;
    }
    if (image)
      variant = parts.size() == 4 ? parts[3] : "";
    else if (parts.size() == 3)
      variant = parts[2];
    else
      return fail("unknown image '" + parts[2] + "'");
  }
  if (image) {
    l.image = *image;
    l.variant = variant;
    return l;
  }
  l.variant = variant;
  // infer the image from the variant
  if (has_p(l.order_class))
    require_odd_prime(p);
  std::vector<CaseLabel> hits;
  auto cases = enumerate_cases(has_p(l.order_class) ? p : 3, l.order_class);
  if (l.order_class == OrderClass::order4p2)
    cases.push_back(CaseLabel{OrderClass::order4p2, "C4", Image::c4, "eq24", p});
  for (auto const &c : cases) {
    if (c.two_group == l.two_group && c.variant == l.variant)
      hits.push_back(c);
  }
  if (hits.size() != 1)
    return fail(hits.empty() ? "no such case" : "ambiguous without an image token");
  if (!has_p(l.order_class))
    hits.front().p = 0;
  return hits.front();
}

std::vector<CaseLabel> enumerate_cases(std::uint32_t p, OrderClass cls)
{
  std::vector<CaseLabel> out;
  if (cls == OrderClass::order8) {
    for (auto const &g : kOrder8)
      add(out, cls, g, Image::direct, "", 0);
    return out;
  }
  require_odd_prime(p);
  auto specials_for = [&](Image image) {
    for (auto const &s : specials()) {
      if (s.cls == cls && s.p == p && s.image == image)
        add(out, cls, s.two_group, s.image, s.variant, p);
    }
  };
  switch (cls) {
  case OrderClass::order8p:
  case OrderClass::order8p2_cyclic:
    for (auto const &g : kOrder8)
      add(out, cls, g, Image::direct, "", p);
    for (auto const &[g, k] : kC2Kernels)
      add(out, cls, g, Image::c2, k, p);
    if (one_mod(p, 4)) {
      add(out, cls, "C8", Image::c4, "a", p);
      add(out, cls, "C4xC2", Image::c4, "a", p);
    }
    if (one_mod(p, 8))
      add(out, cls, "C8", Image::c8, "a", p);
    specials_for(Image::sylow2);
    specials_for(Image::nonnormal);
    break;
  case OrderClass::order8p2: {
    for (auto const &g : kOrder8)
      add(out, cls, g, Image::direct, "", p);
    for (auto const &[g, k] : kC2Kernels) {
      add(out, cls, g, Image::c2, k + "-one", p);
      add(out, cls, g, Image::c2, k + "-both", p);
    }
    for (auto const &[g, v] : kC2xC2)
      add(out, cls, g, Image::c2xc2, v, p);
    for (auto const &g : {"C8", "C4xC2"}) {
      if (one_mod(p, 4)) {
        for (auto const &v : kC4Split)
          add(out, cls, g, Image::c4, v, p);
      } else {
        add(out, cls, g, Image::c4, "rot", p);
      }
    }
    switch (p % 8) {
    case 1:
      for (int r : {4, 7, 10, 11, 12, 13, 14, 15})
        add(out, cls, "C8", Image::c8, row_variant(r), p);
      break;
    case 3: add(out, cls, "C8", Image::c8, row_variant(16), p); break;
    case 5: add(out, cls, "C8", Image::c8, row_variant(7), p); break;
    case 7: add(out, cls, "C8", Image::c8, row_variant(17), p); break;
    }
    if (one_mod(p, 4)) {
      add(out, cls, "C4xC2", Image::full, "[a,b]", p);
      add(out, cls, "C4xC2", Image::full, "[a,ab]", p);
    }
    add(out, cls, "D4", Image::full, "", p);
    add(out, cls, "Q2", Image::full, "", p);
    specials_for(Image::sylow2);
    specials_for(Image::nonnormal);
    break;
  }
  case OrderClass::order4p2:
    if (one_mod(p, 4)) {
      for (auto const &v : kC4Split)
        add(out, cls, "C4", Image::c4, v, p);
    } else {
      add(out, cls, "C4", Image::c4, "eq24", p);
    }
    break;
  case OrderClass::order8: break;
  }
  return out;
}

std::vector<CaseLabel> c8_family(std::uint32_t p)
{
  std::vector<CaseLabel> out;
  for (auto &l : enumerate_cases(p, OrderClass::order8p2)) {
    if (l.two_group == "C8" && (l.image == Image::c2 || l.image == Image::c4 || l.image == Image::c8))
      out.push_back(std::move(l));
  }
  return out;
}

bool is_valid(CaseLabel const &label)
{
  if (has_p(label.order_class) && (label.p < 3 || !modular::is_prime(label.p)))
    return false;
  if (label.order_class == OrderClass::order4p2 && label.two_group == "C4" && label.image == Image::c4 &&
      label.variant == "eq24")
    return true;
  auto const cases = enumerate_cases(label.p, label.order_class);
  return std::find(cases.begin(), cases.end(), label) != cases.end();
}

std::uint64_t declared_order(CaseLabel const &l)
{
  std::uint64_t const p = l.p;
  switch (l.order_class) {
  case OrderClass::order8: return 8;
  case OrderClass::order8p: return 8 * p;
  case OrderClass::order8p2:
  case OrderClass::order8p2_cyclic: return 8 * p * p;
  case OrderClass::order4p2: return 4 * p * p;
  }
  return 0;
}

namespace {

Mat2 c4_matrix(std::string const &v, std::uint32_t p)
{
  if (v == "rot" || v == "eq24")
    return Mat2(p, 0, 1, -1, 0);
  auto const x = static_cast<std::int64_t>(min_primitive(p, 4));
  if (v == "x1")
    return Mat2::diag(p, x, 1);
  if (v == "x-1")
    return Mat2::diag(p, x, -1);
  if (v == "xx")
    return Mat2::diag(p, x, x);
  if (v == "xinv")
    return Mat2::diag(p, x, modular::FpElem(x, p).inverse().value());
  throw InvalidArgument("unknown C_4 action " + v);
}

Mat2 c8_row_matrix(std::string const &v, std::uint32_t p)
{
  int const row = std::stoi(v.substr(3));
  switch (row) {
  case 7: return Mat2(p, 0, 1, min_primitive(p, 4), 0);
  case 16: return Mat2(p, 0, 1, 1, smallest_sqrt(p, -2));
  case 17: return Mat2(p, 0, 1, -1, smallest_sqrt(p, 2));
  default: break;
  }
  static std::map<int, int> const exponent{{4, 1}, {10, 2}, {11, 6}, {12, 7}, {13, 3}, {14, 4}, {15, 0}};
  auto const it = exponent.find(row);
  if (it == exponent.end())
    throw InvalidArgument("unknown row " + v);
  auto const z = min_primitive(p, 8);
  return Mat2::diag(p, z, modular::pow_mod(z, static_cast<std::uint64_t>(it->second), p));
}

} // namespace

std::vector<Mat2> action_matrices(CaseLabel const &l)
{
  if (l.order_class != OrderClass::order8p2 && l.order_class != OrderClass::order4p2)
    throw InvalidArgument("action matrices are defined for a normal C_p x C_p");
  if (!is_valid(l) || find_special(l))
    throw InvalidArgument("label " + format_label(l) + " has no linear action");
  auto const p = l.p;
  auto const &tg = two_group(l.two_group);
  auto const I = Mat2::identity(p);
  std::vector<Mat2> m(tg.gens.size(), I);
  auto gen = [&](std::string const &name) -> Mat2 & {
    auto const it = std::find(tg.gens.begin(), tg.gens.end(), name);
    return m.at(static_cast<std::size_t>(it - tg.gens.begin()));
  };
  auto const one = Mat2::diag(p, -1, 1);
  auto const other = Mat2::diag(p, 1, -1);
  auto const minus = Mat2::scalar(p, -1);
  switch (l.image) {
  case Image::direct: break;
  case Image::c2: {
    auto const dash = l.variant.find('-');
    gen(l.variant.substr(0, dash)) = l.variant.substr(dash + 1) == "one" ? one : minus;
    break;
  }
  case Image::c2xc2:
    if (l.variant == "[a,b]") {
      gen("a") = one;
      gen("b") = other;
    } else if (l.variant == "[ab,b]") {
      gen("a") = one;
      gen("b") = minus;
    } else {
      gen("a") = minus;
      gen("b") = other;
    }
    break;
  case Image::c4: gen("a") = c4_matrix(l.variant, p); break;
  case Image::c8: gen("a") = c8_row_matrix(l.variant, p); break;
  case Image::full:
    if (l.two_group == "D4") {
      gen("a") = Mat2(p, 0, -1, 1, 0);
      gen("b") = Mat2::diag(p, -1, 1);
    } else if (l.two_group == "Q2") {
      auto const q = zoo::quaternion_matrices(p);
      gen("a") = q.at(0);
      gen("b") = q.at(1);
    } else {
      auto const x = static_cast<std::int64_t>(min_primitive(p, 4));
      gen("a") = l.variant == "[a,b]" ? Mat2::diag(p, x, 1) : Mat2::diag(p, -x, -1);
      gen("b") = other;
    }
    break;
  case Image::sylow2:
  case Image::nonnormal: break;
  }
  return m;
}

namespace {

// Scalar action of each 2-group generator on a cyclic odd part of order n.
std::vector<std::int64_t> cyclic_actions(CaseLabel const &l)
{
  auto const n = odd_modulus(l);
  auto const &tg = two_group(l.two_group);
  std::vector<std::int64_t> s(tg.gens.size(), 1);
  auto gen = [&](std::string const &name) -> std::int64_t & {
    auto const it = std::find(tg.gens.begin(), tg.gens.end(), name);
    return s.at(static_cast<std::size_t>(it - tg.gens.begin()));
  };
  switch (l.image) {
  case Image::direct: break;
  case Image::c2: gen(l.variant) = n - 1; break;
  case Image::c4: gen("a") = unit_of_order(n, 4); break;
  case Image::c8: gen("a") = unit_of_order(n, 8); break;
  default: throw InvalidArgument("label " + format_label(l) + " has no cyclic action");
  }
  return s;
}

} // namespace

std::vector<std::string> presentation_generators(CaseLabel const &l)
{
  if (auto const *s = find_special(l))
    return s->gens;
  auto gens = two_group(l.two_group).gens;
  if (l.order_class == OrderClass::order8)
    return gens;
  gens.push_back("c");
  if (l.order_class == OrderClass::order8p2 || l.order_class == OrderClass::order4p2)
    gens.push_back("d");
  return gens;
}

std::string case_relators(CaseLabel const &l)
{
  if (!is_valid(l))
    throw InvalidArgument("label " + format_label(l) + " is not valid for its prime");
  if (auto const *s = find_special(l))
    return s->relators;
  auto const &tg = two_group(l.two_group);
  std::string r = tg.relators.substr(0, tg.relators.size() - 2);
  if (l.order_class == OrderClass::order8)
    return r + "=1";
  auto const n = odd_modulus(l);
  auto const ns = std::to_string(n);
  if (l.order_class == OrderClass::order8p || l.order_class == OrderClass::order8p2_cyclic) {
    r += "=c^" + ns;
    auto const s = cyclic_actions(l);
    for (std::size_t i = 0; i < s.size(); ++i)
      r += "=c^" + tg.gens[i] + exp_term("c", s[i], n);
    return r + "=1";
  }
  r += "=c^" + ns + "=d^" + ns + "=(c,d)";
  auto const m = action_matrices(l);
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto const &g = tg.gens[i];
    auto const &a = m[i].m;
    r += "=c^" + g + exp_term("c", a[0], n) + exp_term("d", a[1], n);
    r += "=d^" + g + exp_term("c", a[2], n) + exp_term("d", a[3], n);
  }
  return r + "=1";
}

bool satisfies_relators(PermGroup const &g, CaseLabel const &l)
{
  auto const pres = parse_presentation(case_relators(l), {}, presentation_generators(l));
  if (g.generators().size() != pres.generator_count())
    return false;
  for (auto const &w : pres.relators) {
    if (!evaluate_word(w, g.generators(), g.identity()).is_identity())
      return false;
  }
  return true;
}

PermGroup build_case(CaseLabel const &l)
{
  if (!is_valid(l))
    throw InvalidArgument("label " + format_label(l) + " is not valid for its prime");
  PermGroup g;
  if (find_special(l) || l.order_class == OrderClass::order8) {
    auto const pres = parse_presentation(case_relators(l), {}, presentation_generators(l));
    g = reduce_degree(enumerate_group(pres));
  } else {
    auto const &tg = two_group(l.two_group);
    auto const acting = enumerate_group(parse_presentation(tg.relators, {}, tg.gens));
    std::vector<ModMatrix> actions;
    std::uint32_t dim = 1;
    if (l.order_class == OrderClass::order8p2 || l.order_class == OrderClass::order4p2) {
      dim = 2;
      for (auto const &m : action_matrices(l))
        actions.push_back(ModMatrix::of(m.m[0], m.m[1], m.m[2], m.m[3]));
    } else {
      for (auto s : cyclic_actions(l))
        actions.push_back(ModMatrix::scalar(s));
    }
    g = affine_extension(odd_modulus(l), dim, acting, actions);
  }
  g.set_name(format_label(l));
  if (g.elements().size() != declared_order(l))
    throw Error(format_label(l) + " built with order " + std::to_string(g.elements().size()));
  if (!satisfies_relators(g, l))
    throw Error(format_label(l) + " violates its relators");
  return g;
}

bool sylow_normal(PermGroup const &g, std::uint32_t p)
{
  auto const n = g.order();
  std::uint64_t part = 1;
  for (auto m = n; m % p == 0; m /= p)
    part *= p;
  std::uint64_t count = 0;
  for (auto o : g.element_orders()) {
    auto x = static_cast<std::uint64_t>(o);
    while (x % p == 0)
      x /= p;
    if (x == 1)
      ++count;
  }
  return count == part;
}

// ---------------------------------------------------------------------------
// Presentations from the D_4 and Q_2 notes

namespace {

std::string const kTableD37 =
  "a^8=b^2=a^b*a^{s}=c^{p}=d^{p}=(c,d)=c^a*c^{-x}*d^{x}=d^a*c^{-x}*d^{-x}=(b,c)=d^b*d=f^{y}=(a,f)=(b,f)="
  "c^f*c^{-t}=d^f*d^{-t}=1";
std::string const kTableD5 =
  "a^{p}=a^b*a^{-x}=b^4=c^2=(a*c)^2*(a^-1*c)^2=a*c*b*c*a^-1*c*b^-1*c=(b*c)^2*(b^-1*c)^2=d^{q}=a^d*a^{-t}="
  "b^d*a*b^-1*a=(c,d)=1";
std::string const kTableD17 =
  "a^17=b^16=a^b*a^3=c^4=d^2=(a,c)=(b,c)=(b,d)=(a*d)^2*(a^-1*d)^2=b^4*(d^-1*c^-1)^2=1";
std::string const kTableQ3 =
  "a^3=b^2=((a*b)^2*a^-1*b)^2=c^{p}=d^{p}=(c,d)=c^a*c*d^-1=d^a*c=c^b*c^-1*d^{-x}=d^b*d=e^{q}=c^e*c^{-y}="
  "d^e*d^{-y}=(a,e)=(b,e)=1";
std::string const kTableQ5 =
  "a^3=(a,b^2)=(a*b)^4=(a*b^-1)^4=c^{p}=d^{p}=(c,d)=c^a*c*d^-1=d^a*c=c^b*d^{-x}=d^b*c^-1=e^{q}=(a,e)=(b,e)="
  "c^e*c^{-y}=d^e*d^{-y}=1";
std::string const kTableQ7 =
  "a^3=b^4=(a,b^2)=a*b*(a*b^-1)^3=c^{p}=d^{p}=(c,d)=c^a*c*d^-1=d^a*c=c^b*c^{v}*d^{x}=d^b*c^{y}*d^{w}=e^{q}="
  "(a,e)=(b,e)=c^e*c^{-z}=d^e*d^{-z}=1";
std::string const kTableQ1 =
  "a^2=b^3=(a*b*a*b*a*b^-1)^2=(a,c)=(b,c)=c^{q}=c^{t}*(a*b)^4=d^{p}=e^{p}=(d,e)=d^a*e^{-x}=e^a*d^{-y}="
  "d^b*d*e^-1=e^b*d=d^c*d^{-z}=e^c*e^{-z}=1";

std::vector<std::uint32_t> units_of_order(std::uint32_t p, std::uint32_t k)
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 1; u < p; ++u) {
    if (modular::multiplicative_order(u, p) == k)
      out.push_back(u);
  }
  return out;
}

bool enumerates_to(std::string const &rels, Params const &pm, std::uint64_t want)
{
  try {
    return enumerate(parse_presentation(rels, pm)).order == want;
  } catch (LimitExceeded const &) {
    return false;
  }
}

// First parameter set (in the given order) whose presentation has the wanted order.
std::optional<PresentedClaim> first_valid(std::string const &rels, std::vector<Params> const &candidates,
                                          std::uint64_t want)
{
  for (auto const &pm : candidates) {
    if (enumerates_to(rels, pm, want))
      return PresentedClaim{rels, pm, false};
  }
  return std::nullopt;
}

} // namespace

std::optional<PresentedClaim> table_d_presentation(std::uint32_t p)
{
  require_odd_prime(p);
  std::int64_t const pp = p;
  std::uint64_t const want = 8ull * p * p * (p - 1);
  switch (p % 8) {
  case 3:
  case 7: {
    std::int64_t const s = p % 8 == 3 ? 5 : 1;
    static std::map<std::uint32_t, std::array<std::int64_t, 3>> const printed{
      {3, {1, 1, 1}}, {11, {4, 5, 3}}, {19, {3, 9, 4}}, {7, {2, 3, 4}}, {23, {9, 11, 4}}};
    if (auto it = printed.find(p); it != printed.end())
      return PresentedClaim{kTableD37,
                            {{"s", s}, {"p", pp}, {"x", it->second[0]}, {"y", it->second[1]}, {"t", it->second[2]}},
                            true};
    std::int64_t const y = (pp - 1) / 2;
    auto const t = units_of_order(p, static_cast<std::uint32_t>(y)).front();
    std::vector<Params> cands;
    for (std::uint32_t x = 1; x < p; ++x) {
      if (modular::FpElem(16, p) * modular::FpElem(x, p).pow(8) == modular::FpElem(1, p))
        cands.push_back({{"s", s}, {"p", pp}, {"x", x}, {"y", y}, {"t", t}});
    }
    return first_valid(kTableD37, cands, want);
  }
  case 5: {
    static std::map<std::uint32_t, std::array<std::int64_t, 3>> const printed{{13, {-5, 3, 3}}, {29, {12, 7, -13}}};
    if (auto it = printed.find(p); it != printed.end())
      return PresentedClaim{
        kTableD5, {{"p", pp}, {"x", it->second[0]}, {"q", it->second[1]}, {"t", it->second[2]}}, true};
    std::int64_t const q = (pp - 1) / 4;
    if (q == 1)
      return std::nullopt;
    std::vector<Params> cands;
    for (auto x : modular::primitive_roots_of_unity(p, 4)) {
      for (auto t : units_of_order(p, static_cast<std::uint32_t>(q)))
        cands.push_back({{"p", pp}, {"x", x}, {"q", q}, {"t", t}});
    }
    return first_valid(kTableD5, cands, want);
  }
  default:
    if (p == 17)
      return PresentedClaim{kTableD17, {}, true};
    return std::nullopt;
  }
}

std::optional<PresentedClaim> table_q_presentation(std::uint32_t p)
{
  require_odd_prime(p);
  std::int64_t const pp = p;
  std::uint64_t const want = 24ull * p * p * (p - 1);
  switch (p % 8) {
  case 3: {
    std::int64_t const q = (pp - 1) / 2;
    auto const y = units_of_order(p, static_cast<std::uint32_t>(q)).front();
    std::vector<Params> cands;
    for (std::int64_t x = 1; x < pp; ++x)
      cands.push_back({{"p", pp}, {"q", q}, {"x", x}, {"y", y}});
    return first_valid(kTableQ3, cands, want);
  }
  case 5: {
    std::int64_t const q = (pp - 1) / 4;
    auto const y = units_of_order(p, static_cast<std::uint32_t>(q)).front();
    auto roots = modular::primitive_roots_of_unity(p, 4);
    std::sort(roots.begin(), roots.end());
    std::vector<Params> cands;
    for (auto x : roots)
      cands.push_back({{"p", pp}, {"q", q}, {"x", x}, {"y", y}});
    return first_valid(kTableQ5, cands, want);
  }
  case 7: {
    std::int64_t const q = (pp - 1) / 2;
    auto const z = units_of_order(p, static_cast<std::uint32_t>(q)).front();
    static std::map<std::uint32_t, std::array<std::int64_t, 4>> const printed{
      {7, {1, -1, 1, 5}}, {23, {1, -1, 7, 3}}, {31, {1, -1, 12, 5}}, {47, {1, -1, 18, 26}}, {71, {1, -1, 7, 20}}};
    if (auto it = printed.find(p); it != printed.end()) {
      auto const &[v, w, x, y] = it->second;
      return PresentedClaim{
        kTableQ7, {{"p", pp}, {"v", v}, {"w", w}, {"x", x}, {"y", y}, {"q", q}, {"z", z}}, true};
    }
    auto const sols = gl2search::search_special(p).solutions;
    if (sols.empty())
      return std::nullopt;
    return PresentedClaim{kTableQ7,
                          {{"p", pp}, {"v", 1}, {"w", -1}, {"x", sols.front().tuple.at(0)}, {"y", sols.front().tuple.at(1)},
                           {"q", q}, {"z", z}},
                          false};
  }
  default: {
    auto const s = min_primitive(p, 8);
    auto const y = modular::FpElem(s, p).inverse().value();
    std::int64_t const q = pp - 1;
    return PresentedClaim{kTableQ1,
                          {{"p", pp}, {"q", q}, {"t", q / 2}, {"x", s}, {"y", y}, {"z", modular::primitive_root(p)}},
                          p == 17};
  }
  }
}

// ---------------------------------------------------------------------------
// Claims

namespace {

C hol(std::uint64_t n) { return C::leaf(GroupName::Hol_C, {static_cast<std::int64_t>(n)}); }
C cyc(std::uint64_t n) { return C::leaf(GroupName::Cyclic, {static_cast<std::int64_t>(n)}); }
C klein() { return C::leaf(GroupName::ElemAbelian, {2, 2}); }
C d4() { return C::leaf(GroupName::Dihedral, {4}); }
C sym(std::int64_t n) { return C::leaf(GroupName::Sym, {n}); }
C hol_pp(std::uint32_t p) { return C::leaf(GroupName::Hol_Cp2, {p}); }
C h_p2(std::uint32_t p) { return C::leaf(GroupName::H_pn, {p, 2}); }
C c168() { return C::leaf(GroupName::Complete168); }

C aut_order8(std::string const &g)
{
  if (g == "C8")
    return klein();
  if (g == "C4xC2" || g == "D4")
    return d4();
  if (g == "E8")
    return C::leaf(GroupName::GL32);
  return sym(4);
}

// The factor printed for each C_2-type extension.
C c2_factor(std::string const &g, std::string const &kernel)
{
  if (g == "C8" || (g == "D4" && kernel == "a"))
    return klein();
  if (g == "C4xC2")
    return kernel == "a" ? d4() : cyc(2);
  if (g == "E8")
    return sym(4);
  return d4();
}

// Aut((C_p x C_p) @ C_4) per action.
C c4_core(std::string const &v, std::uint32_t p)
{
  if (v == "rot" || v == "eq24")
    return one_mod(p, 4) ? C::wreath(hol(p)) : h_p2(p);
  if (v == "x1")
    return C::product({hol(p), cyc(p - 1)});
  if (v == "x-1")
    return C::product({hol(p), hol(p)});
  if (v == "xx")
    return hol_pp(p);
  return C::wreath(hol(p));
}

C special_claim(std::string const &v)
{
  static std::map<std::string, std::vector<C>> const claims{
    {"A4xC2", {sym(4)}},
    {"SL23", {sym(4)}},
    {"Frobenius56", {c168()}},
    {"S4", {sym(4)}},
    {"A4xC3xC2", {sym(4), sym(3)}},
    {"SL23xC3", {sym(4), sym(3)}},
    {"F56xC7", {c168(), hol(7)}},
    {"S4xC3", {sym(4), cyc(2)}},
    {"A4xS3", {sym(4), sym(3)}},
    {"A4C3C2", {C::leaf(GroupName::Complete432)}},
    {"V4C9xC2", {sym(4), cyc(3)}},
    {"Q2C9", {sym(4), cyc(3)}},
    {"E8C49", {c168(), cyc(6)}},
    {"V4D9", {C::leaf(GroupName::Complete216)}},
  };
  return C::product(claims.at(v));
}

} // namespace

StructureClaim expected_aut(CaseLabel const &l)
{
  if (!is_valid(l))
    throw InvalidArgument("label " + format_label(l) + " is not valid for its prime");
  auto const p = l.p;
  if (l.order_class == OrderClass::order8)
    return aut_order8(l.two_group);
  if (find_special(l))
    return special_claim(l.variant);
  switch (l.order_class) {
  case OrderClass::order8p:
  case OrderClass::order8p2_cyclic: {
    auto const n = odd_modulus(l);
    auto const h = hol(n);
    switch (l.image) {
    case Image::direct: return C::product({aut_order8(l.two_group), cyc(n / p * (p - 1))});
    case Image::c2: return C::product({h, c2_factor(l.two_group, l.variant)});
    case Image::c4: return C::product({h, cyc(2)});
    default: return h;
    }
  }
  case OrderClass::order4p2: return c4_core(l.variant, p);
  default: break;
  }
  // 8p^2 with C_p x C_p
  switch (l.image) {
  case Image::direct: return C::product({aut_order8(l.two_group), C::leaf(GroupName::GL2, {p})});
  case Image::c2: {
    auto const dash = l.variant.find('-');
    auto const f = c2_factor(l.two_group, l.variant.substr(0, dash));
    if (l.variant.substr(dash + 1) == "one")
      return C::product({f, cyc(p - 1), hol(p)});
    return C::product({f, hol_pp(p)});
  }
  case Image::c2xc2:
    if (l.variant == "[a,b]" && l.two_group != "E8")
      return C::product({klein(), hol(p), hol(p)});
    return C::wreath(C::product({hol(p), cyc(2)}));
  case Image::c4: return C::product({cyc(2), c4_core(l.variant, p)});
  case Image::c8: {
    int const row = std::stoi(l.variant.substr(3));
    if (!one_mod(p, 8))
      return h_p2(p);
    switch (row) {
    case 4: return hol_pp(p);
    case 10:
    case 11:
    case 14: return C::product({hol(p), hol(p)});
    case 15: return C::product({hol(p), cyc(p - 1)});
    default: return C::wreath(hol(p));
    }
  }
  case Image::full: {
    if (l.two_group == "C4xC2")
      return l.variant == "[a,b]" ? C::product({hol(p), hol(p)}) : C::wreath(hol(p));
    auto const ps = std::to_string(p);
    auto const cp2 = "(C_" + ps + " x C_" + ps + ") @ ";
    if (l.two_group == "D4") {
      if (p == 5)
        return C::wreath(hol(5));
      auto const pc = table_d_presentation(p);
      if (!pc)
        throw NotFound("no D_4-image Aut presentation applies at p = " + ps);
      std::string name;
      switch (p % 8) {
      case 3: name = cp2 + "(QD_8 x C_" + std::to_string((p - 1) / 2) + ")"; break;
      case 7: name = cp2 + "(D_8 x C_" + std::to_string((p - 1) / 2) + ")"; break;
      case 5: name = "((C_" + ps + " @ C_4) wr C_2) @ C_" + std::to_string((p - 1) / 4); break;
      default: name = cp2 + "(C_" + std::to_string(p - 1) + " . (C_4 wr C_2))"; break;
      }
      return C::presented(name, pc->relators, pc->params, 8ull * p * p * (p - 1));
    }
    if (p == 3)
      return hol_pp(3);
    auto const pc = table_q_presentation(p);
    if (!pc)
      throw NotFound("no Q_2-image Aut presentation resolves at p = " + ps);
    std::string name;
    switch (p % 8) {
    case 3: name = cp2 + "(GL(2,3) x C_" + std::to_string((p - 1) / 2) + ")"; break;
    case 5: name = cp2 + "((SL(2,3) @ C_4) x C_" + std::to_string((p - 1) / 4) + ")"; break;
    case 7: name = cp2 + "(<2,3,4> x C_" + std::to_string((p - 1) / 2) + ")"; break;
    default: name = cp2 + "(SL(2,3) @ C_" + std::to_string(p - 1) + ")"; break;
    }
    return C::presented(name, pc->relators, pc->params, 24ull * p * p * (p - 1));
  }
  default: break;
  }
  throw NotFound("no published structure for " + format_label(l));
}

// ---------------------------------------------------------------------------
// Printed C_8 data

std::string eq23_relators(std::int64_t w, std::int64_t x, std::int64_t y, std::int64_t z)
{
  auto t = [](std::string_view g, std::int64_t e) {
    return e == 0 ? std::string{} : "*" + std::string(g) + "^" + std::to_string(e);
  };
  return "a^{p}=b^{p}=(a,b)=c^8=a^c" + t("a", w) + t("b", x) + "=b^c" + t("a", y) + t("b", z) + "=1";
}

std::vector<PrintedAction> printed_c8_actions(std::uint32_t p)
{
  auto L = [p](Image i, std::string v) { return CaseLabel{OrderClass::order8p2, "C8", i, std::move(v), p}; };
  std::vector<PrintedAction> out{
    {L(Image::c2, "a-one"), 1, 0, 0, -1},
    {L(Image::c2, "a-both"), 1, 0, 0, 1},
  };
  switch (p) {
  case 3:
    out.push_back({L(Image::c4, "rot"), 0, -1, 1, 0});
    out.push_back({L(Image::c8, "row16"), 0, 1, 1, 1});
    break;
  case 5:
    out.push_back({L(Image::c4, "x1"), 2, 0, 0, -1});
    out.push_back({L(Image::c4, "x-1"), 2, 0, 0, 1});
    out.push_back({L(Image::c4, "xx"), 2, 0, 0, 2});
    out.push_back({L(Image::c4, "xinv"), 2, 0, 0, 3});
    out.push_back({L(Image::c8, "row7"), 0, 1, 2, 0});
    break;
  case 7:
    out.push_back({L(Image::c4, "rot"), 0, -1, 1, 0});
    out.push_back({L(Image::c8, "row17"), 0, 1, -1, 3});
    break;
  case 17:
    out.push_back({L(Image::c4, "x1"), 4, 0, 0, -1});
    out.push_back({L(Image::c4, "x-1"), 4, 0, 0, 1});
    out.push_back({L(Image::c4, "xx"), 4, 0, 0, 4});
    out.push_back({L(Image::c4, "xinv"), 4, 0, 0, -4});
    out.push_back({L(Image::c8, "row4"), -2, 0, 0, -2});
    out.push_back({L(Image::c8, "row7"), 0, -1, 4, 0});
    out.push_back({L(Image::c8, "row10"), -2, 0, 0, -4});
    out.push_back({L(Image::c8, "row11"), -2, 0, 0, 4});
    out.push_back({L(Image::c8, "row12"), -2, 0, 0, 8});
    out.push_back({L(Image::c8, "row13"), -2, 0, 0, -8});
    out.push_back({L(Image::c8, "row14"), -2, 0, 0, 1});
    out.push_back({L(Image::c8, "row15"), -2, 0, 0, -1});
    break;
  default: return {};
  }
  return out;
}

} // namespace octoprime::catalog
