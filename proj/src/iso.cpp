#include "octoprime/iso.hpp"

#include <algorithm>

#include "octoprime/errors.hpp"
#include "octoprime/hom_search.hpp"

namespace octoprime {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0)
        n /= q;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

// Invariant factors of G/D from the orders of its cosets.
std::vector<std::uint64_t> abelian_type(PermGroup const &g, std::vector<std::uint32_t> const &derived)
{
  auto const &t = g.elements();
  auto const n = t.size();
  std::vector<std::uint32_t> coset(n, kNone);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (coset[x] != kNone)
      continue;
    auto const id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto d : derived)
      coset[t.multiply(x, d)] = id;
  }
  // order of each coset in the quotient
  std::vector<std::uint64_t> qorder(reps.size(), 1);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    auto y = reps[c];
    std::uint64_t k = 1;
    while (coset[y] != 0) {
      y = t.multiply(y, reps[c]);
      ++k;
    }
    qorder[c] = k;
  }
  std::uint64_t const m = reps.size();
  std::vector<std::uint64_t> factors;
  for (auto q : prime_factors(m)) {
    // n_e = #{a : a^(q^e) = 1} = q^(sum min(e, lambda_i))
    std::vector<std::uint64_t> logs{0};
    for (std::uint64_t e = 1, qe = q;; ++e, qe *= q) {
      std::uint64_t cnt = 0;
      for (auto o : qorder) {
        if (qe % o == 0)
          ++cnt;
      }
      std::uint64_t lg = 0;
      for (auto c = cnt; c > 1; c /= q)
        ++lg;
      logs.push_back(lg);
      if (logs[e] == logs[e - 1])
        break;
    }
    // parts >= e: logs[e] - logs[e-1]
    std::vector<std::uint64_t> at_least;
    for (std::size_t e = 1; e < logs.size(); ++e)
      at_least.push_back(logs[e] - logs[e - 1]);
    for (std::size_t e = 0; e < at_least.size(); ++e) {
      auto const next = e + 1 < at_least.size() ? at_least[e + 1] : 0;
      std::uint64_t qe = 1;
      for (std::size_t i = 0; i <= e; ++i)
        qe *= q;
      for (std::uint64_t r = 0; r < at_least[e] - next; ++r)
        factors.push_back(qe);
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

} // namespace

InvariantProfile profile(PermGroup const &g)
{
  InvariantProfile pr;
  auto const &t = g.elements();
  pr.order = t.size();
  pr.center_order = center_indices(g).size();
  auto const derived = derived_subgroup(g);
  pr.derived_order = derived.size();
  pr.abelianization = abelian_type(g, derived);
  auto const &orders = g.element_orders();
  for (auto o : orders)
    ++pr.spectrum[o];
  auto const &ci = g.classes();
  for (std::size_t c = 0; c < ci.reps.size(); ++c)
    pr.class_sizes[orders[ci.reps[c]]].push_back(ci.sizes[c]);
  for (auto &[o, sizes] : pr.class_sizes)
    std::sort(sizes.begin(), sizes.end());
  return pr;
}

PermGroup on_short_generators(PermGroup const &g)
{
  auto const &t = g.elements();
  std::vector<Perm> gens;
  for (auto i : choose_generators(g))
    gens.push_back(t.perm(i));
  PermGroup out(g.degree(), gens, g.name());
  out.set_known_order(t.size());
  return out;
}

bool is_isomorphic_by_search(PermGroup const &a, PermGroup const &b, Budget budget)
{
  if (a.order() != b.order())
    return false;
  auto const src = on_short_generators(a);
  BudgetMeter meter(budget);
  HomSearch search(src, b, meter);
  // up to an inner automorphism of b the first image is a class representative
  auto const &reps = b.classes().reps;
  return search.extend({}, &reps).has_value();
}

bool is_isomorphic(PermGroup const &a, PermGroup const &b, Budget budget)
{
  if (a.order() != b.order())
    return false;
  if (!(profile(a) == profile(b)))
    return false;
  return is_isomorphic_by_search(a, b, budget);
}

} // namespace octoprime
