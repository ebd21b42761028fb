#include "octoprime/coset_enum.hpp"

#include <algorithm>
#include <numeric>

#include "octoprime/errors.hpp"

namespace octoprime {

namespace {

class CosetTable
{
public:
  CosetTable(std::size_t ngens, std::size_t max_cosets) : cols_(2 * ngens), max_(max_cosets)
  {
    new_row();
  }

  std::int32_t rows() const { return static_cast<std::int32_t>(parent_.size()); }
  bool alive(std::int32_t c) const { return parent_[c] == c; }
  std::int32_t &at(std::int32_t c, std::size_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  std::size_t cols() const { return cols_; }

  void define(std::int32_t c, std::size_t x)
  {
    auto const d = new_row();
    at(c, x) = d;
    at(d, x ^ 1u) = c;
  }

  void scan_and_fill(std::int32_t c, std::vector<std::uint32_t> const &w)
  {
    std::int32_t f = c;
    std::int32_t b = c;
    std::size_t i = 0;
    std::size_t j = w.size();
    for (;;) {
      while (i < j && at(f, w[i]) >= 0)
        f = at(f, w[i++]);
      if (i == j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1u) >= 0)
        b = at(b, w[--j] ^ 1u);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (i + 1 == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1u) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void fill_row(std::int32_t c)
  {
    for (std::size_t x = 0; x < cols_ && alive(c); ++x) {
      if (at(c, x) < 0)
        define(c, x);
    }
  }

private:
  std::size_t cols_;
  std::size_t max_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;

  std::int32_t new_row()
  {
    if (parent_.size() >= max_)
      throw LimitExceeded("coset table exceeded " + std::to_string(max_) + " rows");
    auto const d = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + cols_, -1);
    return d;
  }

  std::int32_t rep(std::int32_t c)
  {
    std::int32_t r = c;
    while (parent_[r] != r)
      r = parent_[r];
    while (parent_[c] != r) {
      auto const next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l, std::vector<std::int32_t> &queue)
  {
    k = rep(k);
    l = rep(l);
    if (k == l)
      return;
    if (k > l)
      std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::int32_t a, std::int32_t b)
  {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto const e = queue[q];
      for (std::size_t x = 0; x < cols_; ++x) {
        auto const f = at(e, x);
        if (f < 0)
          continue;
        at(f, x ^ 1u) = -1;
        auto const e1 = rep(e);
        auto const f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1u) >= 0) {
          merge(e1, at(f1, x ^ 1u), queue);
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1u) = e1;
        }
      }
    }
  }
};

} // namespace

CosetEnumeration enumerate(Presentation const &pres, std::size_t max_cosets)
{
  pres.validate();
  if (pres.generators.empty())
    throw InvalidArgument("presentation needs at least one generator");
  if (max_cosets < 1)
    throw InvalidArgument("max_cosets must be positive");

  std::vector<std::vector<std::uint32_t>> rels;
  for (auto const &r : pres.relators) {
    std::vector<std::uint32_t> cols;
    for (auto const &l : r.letters()) {
      auto const col = 2 * l.gen + (l.exp < 0 ? 1u : 0u);
      auto const n = l.exp < 0 ? -l.exp : l.exp;
      cols.insert(cols.end(), static_cast<std::size_t>(n), col);
    }
    rels.push_back(std::move(cols));
  }
  // Short relators first: they close rows sooner.
  std::stable_sort(rels.begin(), rels.end(), [](auto const &a, auto const &b) { return a.size() < b.size(); });

  CosetTable table(pres.generators.size(), max_cosets);
  for (std::int32_t c = 0; c < table.rows(); ++c) {
    for (auto const &r : rels) {
      if (!table.alive(c))
        break;
      table.scan_and_fill(c, r);
    }
    if (table.alive(c))
      table.fill_row(c);
  }

  std::vector<std::int32_t> index(static_cast<std::size_t>(table.rows()), -1);
  std::uint64_t live = 0;
  for (std::int32_t c = 0; c < table.rows(); ++c) {
    if (table.alive(c))
      index[c] = static_cast<std::int32_t>(live++);
  }
  CosetEnumeration out;
  out.order = live;
  if (live > kMaxDegree)
    return out;
  for (std::size_t g = 0; g < pres.generators.size(); ++g) {
    std::vector<Point> img(live);
    for (std::int32_t c = 0; c < table.rows(); ++c) {
      if (!table.alive(c))
        continue;
      auto const to = table.at(c, 2 * g);
      if (to < 0 || index[to] < 0)
        throw Error("coset table incomplete after enumeration");
      img[index[c]] = static_cast<Point>(index[to]);
    }
    out.generators.emplace_back(std::move(img));
  }
  return out;
}

PermGroup enumerate_group(Presentation const &pres, std::size_t max_cosets)
{
  auto e = enumerate(pres, max_cosets);
  if (e.generators.empty())
    throw LimitExceeded("group of order " + std::to_string(e.order) + " is too large for a regular representation");
  PermGroup g(static_cast<std::size_t>(e.order), std::move(e.generators));
  g.set_known_order(e.order);
  return g;
}

namespace {

struct Candidate
{
  std::vector<std::uint32_t> subgroup;
  std::vector<char> core;
  std::uint64_t core_size = 0;
  std::uint64_t index = 0;
};

/// Elements whose whole conjugacy class lies in the subgroup.
std::vector<char> core_of(PermGroup const &g, std::vector<std::uint32_t> const &sub, std::uint64_t &size)
{
  auto const &info = g.classes();
  std::vector<std::uint32_t> hits(info.reps.size(), 0);
  for (auto x : sub)
    ++hits[info.class_of[x]];
  std::vector<char> core(g.elements().size(), 0);
  size = 0;
  for (auto x : sub) {
    auto const c = info.class_of[x];
    if (hits[c] == info.sizes[c]) {
      core[x] = 1;
      ++size;
    }
  }
  return core;
}

Candidate make_candidate(PermGroup const &g, std::vector<std::uint32_t> sub)
{
  Candidate c;
  c.core = core_of(g, sub, c.core_size);
  c.index = g.elements().size() / sub.size();
  c.subgroup = std::move(sub);
  return c;
}

/// Grows <x> through successive normalizers while the core does not grow.
std::vector<std::uint32_t> grow_subgroup(PermGroup const &g, std::uint32_t x, std::size_t max_rounds)
{
  auto const &t = g.elements();
  auto const &orders = g.element_orders();
  std::vector<std::uint32_t> gens{x};
  auto sub = subgroup_closure(t, gens);
  std::uint64_t core_size = 0;
  core_of(g, sub, core_size);
  for (std::size_t round = 0; round < max_rounds; ++round) {
    std::vector<char> in(t.size(), 0);
    for (auto y : sub)
      in[y] = 1;
    std::vector<std::uint32_t> normalizer;
    for (std::uint32_t y = 0; y < t.size(); ++y) {
      if (in[y])
        continue;
      bool ok = true;
      for (auto h : gens) {
        if (!in[t.conjugate(h, y)]) {
          ok = false;
          break;
        }
      }
      if (ok)
        normalizer.push_back(y);
    }
    std::stable_sort(normalizer.begin(), normalizer.end(),
                     [&](auto a, auto b) { return orders[a] > orders[b]; });
    bool grown = false;
    std::size_t tries = 0;
    for (auto y : normalizer) {
      if (in[y])
        continue;
      if (++tries > 24)
        break;
      auto next_gens = gens;
      next_gens.push_back(y);
      auto next = subgroup_closure(t, next_gens);
      if (next.size() == t.size())
        continue;
      std::uint64_t next_core = 0;
      core_of(g, next, next_core);
      if (next_core != core_size)
        continue;
      gens = std::move(next_gens);
      sub = std::move(next);
      grown = true;
      break;
    }
    if (!grown)
      break;
  }
  return sub;
}

/// Coset ids of the right cosets Hx and the induced action of g's generators.
std::vector<std::vector<std::uint32_t>> coset_action(PermGroup const &g, std::vector<std::uint32_t> const &sub,
                                                     std::uint32_t &ncosets)
{
  auto const &t = g.elements();
  std::vector<std::uint32_t> coset(t.size(), kNone);
  ncosets = 0;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (coset[x] != kNone)
      continue;
    for (auto h : sub)
      coset[t.multiply(h, x)] = ncosets;
    ++ncosets;
  }
  std::vector<std::vector<std::uint32_t>> action(t.generator_count(), std::vector<std::uint32_t>(ncosets, kNone));
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    for (std::size_t k = 0; k < t.generator_count(); ++k)
      action[k][coset[x]] = coset[t.mul_gen(x, k)];
  }
  return action;
}

bool faithful_on(PermGroup const &g, std::vector<char> const &keep)
{
  auto const &t = g.elements();
  for (std::uint32_t i = 1; i < t.size(); ++i) {
    auto e = t.element(i);
    bool trivial = true;
    for (std::size_t x = 0; x < e.size(); ++x) {
      if (keep[x] && e[x] != x) {
        trivial = false;
        break;
      }
    }
    if (trivial)
      return false;
  }
  return true;
}

} // namespace

PermGroup reduce_degree(PermGroup const &g)
{
  auto const &t = g.elements();
  std::uint64_t const n = t.size();
  PermGroup best = g;
  if (g.generators().empty() || n == 1)
    return best;

  // Drop orbits that the action does not need, largest first.
  auto orbs = orbits(g);
  std::stable_sort(orbs.begin(), orbs.end(), [](auto const &a, auto const &b) { return a.size() > b.size(); });
  std::vector<char> keep(g.degree(), 1);
  for (auto const &o : orbs) {
    if (o.size() == 1) {
      keep[o[0]] = 0;
      continue;
    }
    for (auto x : o)
      keep[x] = 0;
    if (!faithful_on(g, keep)) {
      for (auto x : o)
        keep[x] = 1;
    }
  }
  std::vector<std::uint32_t> kept;
  for (std::uint32_t x = 0; x < g.degree(); ++x) {
    if (keep[x])
      kept.push_back(x);
  }
  if (!kept.empty() && kept.size() < g.degree()) {
    best = restrict_to(g, kept);
    best.set_known_order(n);
  }
  std::uint64_t best_degree = best.degree();

  // Candidate subgroups: grown cyclic subgroups and point stabilizers.
  auto const &info = g.classes();
  auto const &orders = g.element_orders();
  std::vector<std::uint32_t> reps;
  for (auto r : info.reps) {
    if (r != 0)
      reps.push_back(r);
  }
  std::stable_sort(reps.begin(), reps.end(), [&](auto a, auto b) { return orders[a] > orders[b]; });
  std::size_t const max_starts = n > 20000 ? 6 : (n > 3000 ? 16 : 40);
  if (reps.size() > max_starts)
    reps.resize(max_starts);

  std::vector<Candidate> cands;
  for (auto r : reps) {
    auto sub = grow_subgroup(g, r, n > 20000 ? 6 : 12);
    if (sub.size() < n)
      cands.push_back(make_candidate(g, std::move(sub)));
  }
  for (auto const &o : orbits(g)) {
    std::vector<std::uint32_t> stab;
    for (std::uint32_t i = 0; i < t.size(); ++i) {
      if (t.element(i)[o[0]] == o[0])
        stab.push_back(i);
    }
    if (stab.size() < n)
      cands.push_back(make_candidate(g, std::move(stab)));
  }
  std::stable_sort(cands.begin(), cands.end(), [](auto const &a, auto const &b) { return a.index < b.index; });
  if (cands.size() > 32)
    cands.resize(32);

  // Greedy covers: start from each candidate, keep adding the cheapest one
  // that shrinks the common core.
  std::vector<std::size_t> best_choice;
  for (std::size_t s = 0; s < cands.size(); ++s) {
    std::vector<std::size_t> choice{s};
    std::vector<char> kernel = cands[s].core;
    std::uint64_t kernel_size = cands[s].core_size;
    std::uint64_t total = cands[s].index;
    while (kernel_size > 1 && total < best_degree) {
      std::size_t pick = cands.size();
      std::uint64_t pick_size = kernel_size;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        std::uint64_t sz = 0;
        for (std::uint32_t i = 0; i < n; ++i)
          sz += (kernel[i] && cands[c].core[i]) ? 1 : 0;
        if (sz < kernel_size &&
            (pick == cands.size() || cands[c].index < cands[pick].index ||
             (cands[c].index == cands[pick].index && sz < pick_size))) {
          pick = c;
          pick_size = sz;
        }
      }
      if (pick == cands.size())
        break;
      for (std::uint32_t i = 0; i < n; ++i)
        kernel[i] = kernel[i] && cands[pick].core[i];
      kernel_size = pick_size;
      total += cands[pick].index;
      choice.push_back(pick);
    }
    if (kernel_size == 1 && total < best_degree) {
      best_degree = total;
      best_choice = choice;
    }
  }
  if (best_choice.empty())
    return best;

  std::vector<std::vector<Point>> images(g.generators().size(), std::vector<Point>(best_degree));
  std::uint32_t offset = 0;
  for (auto c : best_choice) {
    std::uint32_t m = 0;
    auto const action = coset_action(g, cands[c].subgroup, m);
    for (std::size_t k = 0; k < action.size(); ++k) {
      for (std::uint32_t x = 0; x < m; ++x)
        images[k][offset + x] = static_cast<Point>(offset + action[k][x]);
    }
    offset += m;
  }
  std::vector<Perm> gens;
  for (auto &img : images)
    gens.emplace_back(std::move(img));
  PermGroup out(best_degree, std::move(gens), g.name());
  out.set_known_order(n);
  return out;
}

} // namespace octoprime
