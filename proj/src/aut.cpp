#include "octoprime/aut.hpp"

#include <numeric>
#include <random>

#include "octoprime/coset_enum.hpp"
#include "octoprime/errors.hpp"
#include "octoprime/hom_search.hpp"
#include "octoprime/iso.hpp"

namespace octoprime {

namespace {

class OrbitPartition
{
public:
  explicit OrbitPartition(std::size_t n) : parent_(n), size_(n, 1), excluded_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// True if two classes merged.
  bool unite(std::uint32_t a, std::uint32_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (size_[a] < size_[b])
      std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    excluded_[a] = excluded_[a] | excluded_[b];
    return true;
  }

  std::uint32_t size(std::uint32_t x) { return size_[find(x)]; }
  bool excluded(std::uint32_t x) { return excluded_[find(x)] != 0; }
  void exclude(std::uint32_t x) { excluded_[find(x)] = 1; }

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<char> excluded_;
};

PermGroup search_base(PermGroup const &g, AutOptions const &opts)
{
  if (opts.generators.empty())
    return on_short_generators(g);
  PermGroup base(g.degree(), opts.generators, g.name());
  if (base.elements().size() != g.elements().size())
    throw InvalidArgument("given generators do not generate the group");
  return base;
}

} // namespace

std::string to_string(Confidence c)
{
  switch (c) {
  case Confidence::refuted: return "refuted";
  case Confidence::order_only: return "order-only";
  case Confidence::profile_consistent: return "profile-consistent";
  case Confidence::isomorphism_verified: return "isomorphism-verified";
  }
  return "?";
}

AutComputation compute_automorphisms(PermGroup const &g, AutOptions const &opts)
{
  BudgetMeter meter(opts.budget);
  AutComputation out;
  out.group = search_base(g, opts);
  auto const &t = out.group.elements();
  auto const n = t.size();
  if (n > limits().stored_cap)
    throw LimitExceeded("group of order " + std::to_string(n) + " exceeds the stored-element cap");
  out.aut_order = 1;
  if (n == 1) {
    out.elapsed_ms = meter.elapsed_ms();
    return out;
  }

  HomSearch hs(out.group, out.group, meter);
  auto const &gens = hs.generators();
  auto const k = gens.size();
  auto const &words = hs.dst_words();
  std::mt19937_64 rng(opts.seed);
  auto &autos = out.automorphisms;

  for (std::size_t j = k; j-- > 0;) {
    std::vector<std::uint32_t> const prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(j));
    auto const cand = hs.candidates(prefix);
    std::vector<std::int32_t> loc(n, -1);
    for (std::size_t i = 0; i < cand.size(); ++i)
      loc[cand[i]] = static_cast<std::int32_t>(i);
    if (loc[gens[j]] < 0)
      throw Error("generator missing from its own candidate list");
    OrbitPartition part(cand.size());
    auto apply = [&](std::vector<std::uint32_t> const &phi) {
      bool merged = false;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        auto const l = loc[phi[cand[i]]];
        if (l < 0)
          throw Error("automorphism leaves the candidate set");
        merged = part.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(l)) || merged;
      }
      return merged;
    };
    for (auto const &phi : autos)
      apply(phi);

    // Inner automorphisms by elements centralizing the prefix.
    std::vector<std::uint32_t> cent;
    for (std::uint32_t c = 1; c < n; ++c) {
      bool ok = true;
      for (auto a : prefix) {
        if (words.multiply(c, a) != words.multiply(a, c)) {
          ok = false;
          break;
        }
      }
      if (ok)
        cent.push_back(c);
    }
    for (int s = 0; s < 6 && !cent.empty(); ++s) {
      auto const c = cent[rng() % cent.size()];
      auto const ci = t.inverse(c);
      std::vector<std::uint32_t> imgs;
      for (auto gs : gens)
        imgs.push_back(words.multiply(words.multiply(ci, gs), c));
      auto phi = hs.check(imgs);
      if (!phi)
        throw Error("inner automorphism failed the homomorphism check");
      if (apply(*phi))
        autos.push_back(std::move(*phi));
    }

    auto const home = static_cast<std::uint32_t>(loc[gens[j]]);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      auto const x = static_cast<std::uint32_t>(i);
      if (part.find(x) == part.find(home) || part.excluded(x))
        continue;
      auto trial = prefix;
      trial.push_back(cand[i]);
      if (auto phi = hs.extend(trial)) {
        apply(*phi);
        autos.push_back(std::move(*phi));
        if (part.excluded(home))
          throw Error("orbit bookkeeping merged an excluded class");
      } else {
        part.exclude(x);
      }
    }
    out.aut_order *= part.size(home);
  }
  out.elapsed_ms = meter.elapsed_ms();
  return out;
}

PermGroup aut_as_group(AutComputation const &c)
{
  if (c.aut_order > limits().aut_realization_cap)
    throw LimitExceeded("|Aut| = " + std::to_string(c.aut_order) + " exceeds the aut-realization cap");
  auto const &t = c.group.elements();
  auto const name = "Aut(" + c.group.name() + ")";
  if (c.automorphisms.empty()) {
    PermGroup trivial(1, {Perm(1)}, name);
    trivial.set_known_order(1);
    return trivial;
  }
  std::vector<std::int64_t> pos(t.size(), -1);
  std::vector<std::uint32_t> pts;
  for (std::size_t s = 0; s < c.group.generators().size(); ++s) {
    auto const g = t.mul_gen(0, s);
    if (pos[g] < 0) {
      pos[g] = static_cast<std::int64_t>(pts.size());
      pts.push_back(g);
    }
  }
  for (std::size_t q = 0; q < pts.size(); ++q) {
    for (auto const &phi : c.automorphisms) {
      auto const y = phi[pts[q]];
      if (pos[y] < 0) {
        pos[y] = static_cast<std::int64_t>(pts.size());
        pts.push_back(y);
      }
    }
  }
  if (pts.size() > kMaxDegree)
    throw LimitExceeded("Aut acts on " + std::to_string(pts.size()) + " points");
  std::vector<Perm> perms;
  for (auto const &phi : c.automorphisms) {
    std::vector<std::uint32_t> img(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      img[i] = static_cast<std::uint32_t>(pos[phi[pts[i]]]);
    perms.push_back(Perm::from_images(img));
  }
  PermGroup a(pts.size(), perms, name);
  a.set_known_order(c.aut_order);
  auto r = reduce_degree(a);
  PermGroup out(r.degree(), r.generators(), name);
  out.set_known_order(c.aut_order);
  return out;
}

PermGroup aut_as_group(PermGroup const &g, AutOptions const &opts) { return aut_as_group(compute_automorphisms(g, opts)); }

namespace {

bool complete_from(PermGroup const &g, AutComputation const &c, Budget budget)
{
  auto const n = g.order();
  if (center_indices(g).size() != 1 || c.aut_order != n)
    return false;
  if (n > limits().iso_threshold)
    return true;
  return is_isomorphic(aut_as_group(c), g, budget);
}

} // namespace

AutReport count_automorphisms(PermGroup const &g, AutOptions const &opts)
{
  auto c = compute_automorphisms(g, opts);
  AutReport r;
  r.group = g.name();
  r.order = c.group.elements().size();
  r.aut_order = c.aut_order;
  r.inner_order = r.order / center_indices(c.group).size();
  r.complete = complete_from(c.group, c, opts.budget);
  auto const &t = c.group.elements();
  r.generators = c.group.generators();
  for (std::size_t i = 0; i < c.automorphisms.size() && i < opts.max_sampled; ++i) {
    std::vector<Perm> tuple;
    for (std::size_t s = 0; s < r.generators.size(); ++s)
      tuple.push_back(t.perm(c.automorphisms[i][t.mul_gen(0, s)]));
    r.sampled.push_back(std::move(tuple));
  }
  r.elapsed_ms = c.elapsed_ms;
  return r;
}

bool is_complete(PermGroup const &g, AutOptions const &opts)
{
  auto c = compute_automorphisms(g, opts);
  return complete_from(c.group, c, opts.budget);
}

TowerResult tower_step(PermGroup const &g, std::size_t steps, AutOptions const &opts)
{
  TowerResult res;
  PermGroup cur = g;
  for (std::size_t s = 0;; ++s) {
    AutComputation c;
    try {
      c = compute_automorphisms(cur, opts);
    } catch (LimitExceeded const &e) {
      res.stopped = e.what();
      return res;
    }
    TowerEntry e;
    e.order = c.group.elements().size();
    e.aut_order = c.aut_order;
    e.complete = center_indices(c.group).size() == 1 && c.aut_order == e.order;
    res.entries.push_back(e);
    if (e.complete || s == steps)
      return res;
    try {
      cur = aut_as_group(c);
    } catch (LimitExceeded const &ex) {
      res.stopped = ex.what();
      return res;
    }
  }
}

Identification identify_order(std::uint64_t order, StructureClaim const &claim)
{
  auto const want = claim.order();
  if (order != want)
    return {Confidence::refuted, "order " + std::to_string(order) + " vs claimed " + std::to_string(want)};
  return {Confidence::order_only, "orders agree"};
}

Identification identify(PermGroup const &g, StructureClaim const &claim, Budget budget)
{
  auto id = identify_order(g.order(), claim);
  if (id.confidence == Confidence::refuted || g.order() > limits().stored_cap)
    return id;
  auto const h = claim.build();
  if (!(profile(g) == profile(h)))
    return {Confidence::refuted, "invariant profiles differ"};
  if (g.order() > limits().iso_threshold)
    return {Confidence::profile_consistent, "profiles agree; order above the iso threshold"};
  try {
    if (is_isomorphic_by_search(g, h, budget))
      return {Confidence::isomorphism_verified, "explicit isomorphism found"};
    return {Confidence::refuted, "no isomorphism exists"};
  } catch (BudgetExceeded const &) {
    return {Confidence::profile_consistent, "profiles agree; isomorphism search ran out of budget"};
  }
}

} // namespace octoprime
