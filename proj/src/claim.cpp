#include "octoprime/claim.hpp"

#include "octoprime/coset_enum.hpp"
#include "octoprime/errors.hpp"

namespace octoprime {

StructureClaim StructureClaim::leaf(zoo::Spec s)
{
  StructureClaim c;
  c.kind = Kind::zoo;
  c.spec = std::move(s);
  return c;
}

StructureClaim StructureClaim::leaf(zoo::GroupName n, std::vector<std::int64_t> params)
{
  return leaf(zoo::Spec{n, std::move(params)});
}

StructureClaim StructureClaim::product(std::vector<StructureClaim> factors)
{
  if (factors.empty())
    throw InvalidArgument("empty product claim");
  if (factors.size() == 1)
    return factors.front();
  StructureClaim c;
  c.kind = Kind::product;
  c.parts = std::move(factors);
  return c;
}

StructureClaim StructureClaim::wreath(StructureClaim base)
{
  StructureClaim c;
  c.kind = Kind::wreath_c2;
  c.parts.push_back(std::move(base));
  return c;
}

StructureClaim StructureClaim::affine(std::uint32_t p, std::vector<modular::Mat2> action, std::string action_name)
{
  StructureClaim c;
  c.kind = Kind::affine;
  c.p = p;
  c.action = std::move(action);
  c.action_name = std::move(action_name);
  return c;
}

StructureClaim StructureClaim::presented(std::string name, std::string relators, Params params, std::uint64_t order)
{
  StructureClaim c;
  c.kind = Kind::presented;
  c.action_name = std::move(name);
  c.relators = std::move(relators);
  c.params = std::move(params);
  c.declared_order = order;
  return c;
}

std::string StructureClaim::text() const
{
  switch (kind) {
  case Kind::zoo: return zoo::token(spec);
  case Kind::product: {
    std::string s;
    for (auto const &f : parts) {
      if (!s.empty())
        s += " x ";
      auto const t = f.text();
      s += f.kind == Kind::zoo ? t : "(" + t + ")";
    }
    return s;
  }
  case Kind::wreath_c2: {
    auto const &b = parts.front();
    return (b.kind == Kind::zoo ? b.text() : "(" + b.text() + ")") + " wr C_2";
  }
  case Kind::affine: {
    auto const cp = "C_" + std::to_string(p);
    return "(" + cp + " x " + cp + ") @ " + action_name;
  }
  case Kind::presented: return action_name;
  }
  return "?";
}

std::uint64_t StructureClaim::order() const
{
  switch (kind) {
  case Kind::zoo: return zoo::order(spec);
  case Kind::product: {
    std::uint64_t n = 1;
    for (auto const &f : parts)
      n *= f.order();
    return n;
  }
  case Kind::wreath_c2: {
    auto const b = parts.front().order();
    return 2 * b * b;
  }
  case Kind::affine: {
    auto const m = modular::mat2_group(p, action, static_cast<std::size_t>(p) * p * p * p).size();
    return static_cast<std::uint64_t>(p) * p * m;
  }
  case Kind::presented: return declared_order;
  }
  return 0;
}

PermGroup StructureClaim::build() const
{
  PermGroup g;
  switch (kind) {
  case Kind::zoo: g = zoo::make(spec); break;
  case Kind::product: {
    std::vector<PermGroup> fs;
    for (auto const &f : parts)
      fs.push_back(f.build());
    g = direct_product(fs);
    break;
  }
  case Kind::wreath_c2: g = wreath_c2(parts.front().build()); break;
  case Kind::affine: g = semidirect_p2(p, action); break;
  case Kind::presented: {
    auto const full = enumerate_group(parse_presentation(relators, params));
    if (full.order() != declared_order)
      throw Error(action_name + ": presentation enumerates to " + std::to_string(full.order()) + ", declared " +
                  std::to_string(declared_order));
    g = reduce_degree(full);
    break;
  }
  }
  g.set_name(text());
  if (!g.order_known())
    g.set_known_order(order());
  return g;
}

} // namespace octoprime
