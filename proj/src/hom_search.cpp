#include "octoprime/hom_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "octoprime/errors.hpp"

namespace octoprime {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

} // namespace

std::vector<std::uint64_t> element_keys(PermGroup const &g)
{
  auto const &t = g.elements();
  auto const &orders = g.element_orders();
  auto const &ci = g.classes();
  std::vector<std::uint64_t> keys(t.size());
  auto csize = [&](std::uint32_t x) { return static_cast<std::uint64_t>(ci.sizes[ci.class_of[x]]); };
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    auto const x2 = t.multiply(x, x);
    auto const x3 = t.multiply(x2, x);
    std::uint64_t h = orders[x];
    h = mix(h, csize(x));
    h = mix(h, csize(x2));
    h = mix(h, csize(x3));
    keys[x] = h;
  }
  return keys;
}

std::vector<std::uint32_t> choose_generators(PermGroup const &g)
{
  auto const &t = g.elements();
  auto const n = t.size();
  if (n == 1)
    return {0};
  auto const &orders = g.element_orders();
  auto const keys = element_keys(g);
  std::map<std::uint64_t, std::uint32_t> freq;
  for (auto k : keys)
    ++freq[k];
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (orders[a] != orders[b])
      return orders[a] > orders[b];
    return freq[keys[a]] < freq[keys[b]];
  });

  std::vector<std::uint32_t> gens{order.front()};
  auto h = subgroup_closure(t, gens);
  auto const &ci = g.classes();
  std::size_t const per_class = 2;
  std::size_t const cap = n > 20000 ? 24 : 96;
  while (h.size() < n) {
    std::vector<char> in(n, 0);
    for (auto x : h)
      in[x] = 1;
    // a few elements outside the subgroup from every class, largest order first
    std::vector<std::size_t> taken(ci.sizes.size(), 0);
    std::vector<std::uint32_t> trial_set;
    for (auto x : order) {
      auto &c = taken[ci.class_of[x]];
      if (in[x] || c >= per_class)
        continue;
      ++c;
      trial_set.push_back(x);
      if (trial_set.size() >= cap)
        break;
    }
    std::uint32_t best = kNone;
    std::size_t best_size = 0;
    for (auto x : trial_set) {
      auto trial = gens;
      trial.push_back(x);
      auto const sz = subgroup_closure(t, trial).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
      if (sz == n)
        break;
    }
    gens.push_back(best);
    h = subgroup_closure(t, gens);
  }
  return gens;
}

WordTable::WordTable(ElementTable const &t) : table_(&t)
{
  auto const n = t.size();
  offset_.assign(n + 1, 0);
  std::vector<std::uint32_t> len(n, 0);
  for (std::uint32_t i = 1; i < n; ++i)
    len[i] = len[t.parent(i)] + 1;
  for (std::uint32_t i = 0; i < n; ++i)
    offset_[i + 1] = offset_[i] + len[i];
  data_.resize(offset_[n]);
  for (std::uint32_t i = 1; i < n; ++i) {
    // parent chain gives the word right to left
    std::uint32_t x = i;
    std::uint32_t pos = offset_[i + 1];
    while (x != 0) {
      data_[--pos] = t.parent_gen(x);
      x = t.parent(x);
    }
  }
}

HomSearch::HomSearch(PermGroup const &src, PermGroup const &dst, BudgetMeter &meter)
  : src_(src), dst_(dst), meter_(meter), dst_words_(dst.elements()), dst_keys_(element_keys(dst))
{
  auto const &st = src.elements();
  if (st.size() != dst.elements().size())
    throw InvalidArgument("HomSearch needs groups of equal order");
  auto const src_keys = &src == &dst ? dst_keys_ : element_keys(src);
  auto const k = src.generators().size();
  for (std::size_t s = 0; s < k; ++s)
    gens_.push_back(st.mul_gen(0, s));

  pool_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t y = 0; y < dst_keys_.size(); ++y) {
      if (dst_keys_[y] == src_keys[gens_[i]])
        pool_[i].push_back(y);
    }
  }
  pair_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto const gi = gens_[i];
    for (std::size_t a = 0; a < i; ++a) {
      auto const ga = gens_[a];
      auto const prod = st.multiply(ga, gi);
      pair_[i].push_back(
        {src_keys[prod], src_keys[st.multiply(ga, st.inverse(gi))], src_keys[st.multiply(prod, gi)]});
    }
  }
}

bool HomSearch::compatible(std::size_t i, std::uint32_t y, std::span<std::uint32_t const> prefix) const
{
  auto const &dt = dst_.elements();
  auto const yinv = dt.inverse(y);
  for (std::size_t a = 0; a < prefix.size(); ++a) {
    auto const &pk = pair_[i][a];
    auto const prod = dst_words_.multiply(prefix[a], y);
    if (dst_keys_[prod] != pk.prod)
      return false;
    if (dst_keys_[dst_words_.multiply(prefix[a], yinv)] != pk.prod_inv)
      return false;
    if (dst_keys_[dst_words_.multiply(prod, y)] != pk.prod_sq)
      return false;
  }
  return true;
}

std::vector<std::uint32_t> HomSearch::candidates(std::span<std::uint32_t const> prefix, Exec exec) const
{
  auto const i = prefix.size();
  auto const &pool = pool_.at(i);
  std::vector<char> ok(pool.size(), 0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(pool.size()); ++j)
      ok[static_cast<std::size_t>(j)] = compatible(i, pool[static_cast<std::size_t>(j)], prefix) ? 1 : 0;
  } else {
    for (std::size_t j = 0; j < pool.size(); ++j)
      ok[j] = compatible(i, pool[j], prefix) ? 1 : 0;
  }
  std::vector<std::uint32_t> out;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (ok[j])
      out.push_back(pool[j]);
  }
  return out;
}

std::optional<std::vector<std::uint32_t>> HomSearch::check(std::span<std::uint32_t const> images) const
{
  auto const &st = src_.elements();
  auto const n = st.size();
  auto const k = gens_.size();
  std::vector<std::uint32_t> img(n, kNone);
  img[0] = 0;
  std::vector<std::span<std::uint32_t const>> words(k);
  for (std::size_t s = 0; s < k; ++s)
    words[s] = dst_words_.word(images[s]);
  auto const &dt = dst_.elements();
  for (std::uint32_t i = 0; i < n; ++i) {
    auto const x = img[i];
    for (std::size_t s = 0; s < k; ++s) {
      auto v = x;
      for (auto g : words[s])
        v = dt.mul_gen(v, g);
      auto const c = st.mul_gen(i, s);
      if (img[c] == kNone)
        img[c] = v;
      else if (img[c] != v)
        return std::nullopt;
    }
  }
  std::vector<char> hit(n, 0);
  for (auto v : img) {
    if (hit[v])
      return std::nullopt;
    hit[v] = 1;
  }
  return img;
}

bool HomSearch::partial_check(std::span<std::uint32_t const> images)
{
  auto const &st = src_.elements();
  auto const &dt = dst_.elements();
  auto const m = images.size();
  if (scratch_.size() != st.size())
    scratch_.assign(st.size(), kNone);
  std::vector<std::span<std::uint32_t const>> words(m);
  for (std::size_t s = 0; s < m; ++s)
    words[s] = dst_words_.word(images[s]);
  touched_.clear();
  touched_.push_back(0);
  scratch_[0] = 0;
  bool ok = true;
  for (std::size_t q = 0; q < touched_.size() && ok; ++q) {
    auto const i = touched_[q];
    auto const x = scratch_[i];
    for (std::size_t s = 0; s < m; ++s) {
      auto v = x;
      for (auto g : words[s])
        v = dt.mul_gen(v, g);
      auto const c = st.mul_gen(i, s);
      if (scratch_[c] == kNone) {
        scratch_[c] = v;
        touched_.push_back(c);
      } else if (scratch_[c] != v) {
        ok = false;
        break;
      }
    }
  }
  for (auto i : touched_)
    scratch_[i] = kNone;
  return ok;
}

std::vector<std::uint32_t> HomSearch::generator_images(std::vector<std::uint32_t> const &element_images) const
{
  std::vector<std::uint32_t> out;
  for (auto g : gens_)
    out.push_back(element_images[g]);
  return out;
}

std::optional<std::vector<std::uint32_t>> HomSearch::extend(std::vector<std::uint32_t> prefix,
                                                            std::vector<std::uint32_t> const *first)
{
  return dfs(prefix, first);
}

std::optional<std::vector<std::uint32_t>> HomSearch::dfs(std::vector<std::uint32_t> &images,
                                                         std::vector<std::uint32_t> const *first)
{
  auto const i = images.size();
  if (i == gens_.size()) {
    meter_.tick();
    return check(images);
  }
  std::vector<std::uint32_t> cands;
  if (first) {
    auto const &pool = pool_[i];
    for (auto y : *first) {
      if (std::binary_search(pool.begin(), pool.end(), y) && compatible(i, y, images))
        cands.push_back(y);
    }
  } else {
    cands = candidates(images);
  }
  meter_.tick(1 + cands.size() / 64);
  for (auto y : cands) {
    images.push_back(y);
    // the images so far must define a homomorphism on the subgroup they generate
    if (i >= 1 && i + 1 < gens_.size() && !partial_check(images)) {
      images.pop_back();
      continue;
    }
    auto r = dfs(images, nullptr);
    images.pop_back();
    if (r)
      return r;
  }
  return std::nullopt;
}

} // namespace octoprime
