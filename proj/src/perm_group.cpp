#include "octoprime/perm_group.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <string_view>

#include <omp.h>

#include "octoprime/errors.hpp"

namespace octoprime {

Limits &limits()
{
  static Limits instance;
  return instance;
}

ElementTable::ElementTable(std::size_t degree, std::vector<Perm> const &generators, std::size_t max_order)
  : degree_(degree), ngens_(generators.size())
{
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw InvalidArgument("generator degree mismatch");
  }
  slots_.assign(64, kNone);
  data_.reserve(degree * 64);
  for (std::size_t i = 0; i < degree; ++i)
    data_.push_back(static_cast<Point>(i));
  size_ = 1;
  parent_.push_back(kNone);
  parent_gen_.push_back(kNone);
  insert_slot(0);

  std::vector<Point> tmp(degree);
  for (std::uint32_t i = 0; i < size_; ++i) {
    for (std::size_t g = 0; g < ngens_; ++g) {
      auto const img = generators[g].images();
      Point const *e = data_.data() + static_cast<std::size_t>(i) * degree_;
      for (std::size_t x = 0; x < degree_; ++x)
        tmp[x] = img[e[x]];
      std::uint32_t j = find_raw(tmp.data());
      if (j == kNone) {
        if (size_ >= max_order)
          throw LimitExceeded("group order exceeds " + std::to_string(max_order));
        j = size_++;
        data_.insert(data_.end(), tmp.begin(), tmp.end());
        parent_.push_back(i);
        parent_gen_.push_back(static_cast<std::uint32_t>(g));
        insert_slot(j);
      }
      mul_gen_.push_back(j);
    }
  }

  inverse_.resize(size_);
  for (std::uint32_t i = 0; i < size_; ++i) {
    Point const *e = data_.data() + static_cast<std::size_t>(i) * degree_;
    for (std::size_t x = 0; x < degree_; ++x)
      tmp[e[x]] = static_cast<Point>(x);
    inverse_[i] = find_raw(tmp.data());
  }
}

std::size_t ElementTable::hash(Point const *p) const
{
  std::string_view bytes(reinterpret_cast<char const *>(p), degree_ * sizeof(Point));
  return std::hash<std::string_view>{}(bytes);
}

std::uint32_t ElementTable::find_raw(Point const *p) const
{
  std::size_t const mask = slots_.size() - 1;
  for (std::size_t s = hash(p) & mask;; s = (s + 1) & mask) {
    auto const idx = slots_[s];
    if (idx == kNone)
      return kNone;
    if (std::equal(p, p + degree_, data_.data() + static_cast<std::size_t>(idx) * degree_))
      return idx;
  }
}

void ElementTable::insert_slot(std::uint32_t index)
{
  if (static_cast<std::size_t>(size_) * 2 > slots_.size())
    grow_slots();
  std::size_t const mask = slots_.size() - 1;
  std::size_t s = hash(data_.data() + static_cast<std::size_t>(index) * degree_) & mask;
  while (slots_[s] != kNone)
    s = (s + 1) & mask;
  slots_[s] = index;
}

void ElementTable::grow_slots()
{
  std::vector<std::uint32_t> old(slots_.size() * 2, kNone);
  old.swap(slots_);
  std::size_t const mask = slots_.size() - 1;
  for (auto idx : old) {
    if (idx == kNone)
      continue;
    std::size_t s = hash(data_.data() + static_cast<std::size_t>(idx) * degree_) & mask;
    while (slots_[s] != kNone)
      s = (s + 1) & mask;
    slots_[s] = idx;
  }
}

Perm ElementTable::perm(std::uint32_t i) const
{
  auto e = element(i);
  return Perm(std::vector<Point>(e.begin(), e.end()));
}

std::uint32_t ElementTable::find(std::span<Point const> images) const
{
  if (images.size() != degree_)
    return kNone;
  return find_raw(images.data());
}

std::uint32_t ElementTable::index_of(Perm const &x) const
{
  auto const i = find(x);
  if (i == kNone)
    throw NotFound("permutation " + x.to_cycles() + " is not in the group");
  return i;
}

std::uint32_t ElementTable::multiply(std::uint32_t i, std::uint32_t j) const
{
  thread_local std::vector<Point> tmp;
  tmp.resize(degree_);
  Point const *a = data_.data() + static_cast<std::size_t>(i) * degree_;
  Point const *b = data_.data() + static_cast<std::size_t>(j) * degree_;
  for (std::size_t x = 0; x < degree_; ++x)
    tmp[x] = b[a[x]];
  return find_raw(tmp.data());
}

std::uint32_t ElementTable::conjugate(std::uint32_t i, std::uint32_t j) const
{
  thread_local std::vector<Point> tmp;
  tmp.resize(degree_);
  Point const *a = data_.data() + static_cast<std::size_t>(i) * degree_;
  Point const *b = data_.data() + static_cast<std::size_t>(j) * degree_;
  for (std::size_t x = 0; x < degree_; ++x)
    tmp[b[x]] = b[a[x]];
  return find_raw(tmp.data());
}

std::vector<std::uint32_t> ElementTable::word(std::uint32_t i) const
{
  std::vector<std::uint32_t> w;
  while (i != 0) {
    w.push_back(parent_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

namespace {

std::uint32_t span_order(std::span<Point const> e, std::vector<char> &seen)
{
  std::fill(seen.begin(), seen.end(), 0);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = e[j]) {
      seen[j] = 1;
      ++len;
    }
    result = lcm_u64(result, len);
  }
  return static_cast<std::uint32_t>(result);
}

} // namespace

std::vector<std::uint32_t> element_orders_serial(ElementTable const &t)
{
  std::vector<std::uint32_t> out(t.size());
  std::vector<char> seen(t.degree());
  for (std::uint32_t i = 0; i < t.size(); ++i)
    out[i] = span_order(t.element(i), seen);
  return out;
}

std::vector<std::uint32_t> element_orders_parallel(ElementTable const &t)
{
  std::vector<std::uint32_t> out(t.size());
  auto const n = static_cast<std::int64_t>(t.size());
#pragma omp parallel num_threads(workers())
  {
    std::vector<char> seen(t.degree());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
      out[i] = span_order(t.element(static_cast<std::uint32_t>(i)), seen);
  }
  return out;
}

namespace {

std::vector<std::uint32_t> generator_indices(ElementTable const &t)
{
  std::vector<std::uint32_t> idx(t.generator_count());
  for (std::size_t g = 0; g < idx.size(); ++g)
    idx[g] = t.mul_gen(0, g);
  return idx;
}

ClassInfo classes_from_conjugation(ElementTable const &t, std::vector<std::uint32_t> const &conj)
{
  std::size_t const k = t.generator_count();
  ClassInfo info;
  info.class_of.assign(t.size(), kNone);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (info.class_of[i] != kNone)
      continue;
    auto const id = static_cast<std::uint32_t>(info.reps.size());
    info.reps.push_back(i);
    queue.assign(1, i);
    info.class_of[i] = id;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t g = 0; g < k; ++g) {
        auto const y = conj[static_cast<std::size_t>(queue[q]) * k + g];
        if (info.class_of[y] == kNone) {
          info.class_of[y] = id;
          queue.push_back(y);
        }
      }
    }
    info.sizes.push_back(static_cast<std::uint32_t>(queue.size()));
  }
  return info;
}

} // namespace

ClassInfo conjugacy_classes_serial(ElementTable const &t)
{
  auto const gens = generator_indices(t);
  std::size_t const k = gens.size();
  std::vector<std::uint32_t> conj(static_cast<std::size_t>(t.size()) * k);
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    for (std::size_t g = 0; g < k; ++g)
      conj[static_cast<std::size_t>(i) * k + g] = t.conjugate(i, gens[g]);
  }
  return classes_from_conjugation(t, conj);
}

ClassInfo conjugacy_classes_parallel(ElementTable const &t)
{
  auto const gens = generator_indices(t);
  std::size_t const k = gens.size();
  std::vector<std::uint32_t> conj(static_cast<std::size_t>(t.size()) * k);
  auto const n = static_cast<std::int64_t>(t.size());
#pragma omp parallel for schedule(static) num_threads(workers())
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < k; ++g)
      conj[static_cast<std::size_t>(i) * k + g] = t.conjugate(static_cast<std::uint32_t>(i), gens[g]);
  }
  return classes_from_conjugation(t, conj);
}

struct PermGroup::Cache
{
  std::mutex mutex;
  std::optional<std::uint64_t> known_order;
  std::unique_ptr<ElementTable> table;
  std::unique_ptr<std::vector<std::uint32_t>> orders;
  std::unique_ptr<ClassInfo> classes;
};

PermGroup::PermGroup() : PermGroup(1, {}, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name)
  : degree_(degree), gens_(std::move(generators)), name_(std::move(name)), cache_(std::make_shared<Cache>())
{
  if (degree_ == 0 || degree_ > kMaxDegree)
    throw InvalidArgument("degree must lie in 1.." + std::to_string(kMaxDegree));
  for (auto const &g : gens_) {
    if (g.degree() != degree_)
      throw InvalidArgument("generator degree mismatch");
  }
}

std::uint64_t PermGroup::order() const
{
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->known_order)
      return *cache_->known_order;
  }
  return elements().size();
}

bool PermGroup::order_known() const
{
  std::lock_guard lock(cache_->mutex);
  return cache_->known_order.has_value() || cache_->table != nullptr;
}

void PermGroup::set_known_order(std::uint64_t n)
{
  std::lock_guard lock(cache_->mutex);
  if (cache_->table && cache_->table->size() != n)
    throw InvalidArgument("claimed order " + std::to_string(n) + " contradicts element table size " +
                          std::to_string(cache_->table->size()));
  cache_->known_order = n;
}

ElementTable const &PermGroup::elements() const
{
  std::lock_guard lock(cache_->mutex);
  if (!cache_->table) {
    auto const cap = std::min(limits().stored_cap,
                              limits().stored_bytes_cap / (std::max<std::size_t>(degree_, 1) * sizeof(Point)));
    if (cache_->known_order && *cache_->known_order > cap)
      throw LimitExceeded("group order " + std::to_string(*cache_->known_order) + " at degree " +
                          std::to_string(degree_) + " exceeds stored-element cap " + std::to_string(cap));
    auto table = std::make_unique<ElementTable>(degree_, gens_, cap);
    if (cache_->known_order && *cache_->known_order != table->size())
      throw Error("group " + name_ + " has " + std::to_string(table->size()) + " elements, expected " +
                  std::to_string(*cache_->known_order));
    cache_->table = std::move(table);
  }
  return *cache_->table;
}

std::vector<std::uint32_t> const &PermGroup::element_orders() const
{
  auto const &t = elements();
  std::lock_guard lock(cache_->mutex);
  if (!cache_->orders) {
    cache_->orders = std::make_unique<std::vector<std::uint32_t>>(
      default_exec() == Exec::parallel ? element_orders_parallel(t) : element_orders_serial(t));
  }
  return *cache_->orders;
}

ClassInfo const &PermGroup::classes() const
{
  auto const &t = elements();
  std::lock_guard lock(cache_->mutex);
  if (!cache_->classes) {
    cache_->classes = std::make_unique<ClassInfo>(
      default_exec() == Exec::parallel ? conjugacy_classes_parallel(t) : conjugacy_classes_serial(t));
  }
  return *cache_->classes;
}

bool PermGroup::is_abelian() const
{
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i])
        return false;
    }
  }
  return true;
}

std::vector<Perm> closure(std::vector<Perm> const &gens, std::size_t max_order)
{
  if (gens.empty())
    throw InvalidArgument("closure needs at least one generator");
  if (max_order < 1)
    throw InvalidArgument("max_order must be positive");
  ElementTable t(gens.front().degree(), gens, max_order);
  std::vector<Perm> out;
  out.reserve(t.size());
  for (std::uint32_t i = 0; i < t.size(); ++i)
    out.push_back(t.perm(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> center_indices(PermGroup const &g)
{
  auto const &info = g.classes();
  std::vector<std::uint32_t> out;
  for (std::size_t c = 0; c < info.reps.size(); ++c) {
    if (info.sizes[c] == 1)
      out.push_back(info.reps[c]);
  }
  return out;
}

std::vector<Perm> center(PermGroup const &g)
{
  std::vector<Perm> out;
  for (auto i : center_indices(g))
    out.push_back(g.elements().perm(i));
  return out;
}

std::vector<std::pair<Perm, std::uint64_t>> conjugacy_classes(PermGroup const &g)
{
  auto const &info = g.classes();
  std::vector<std::pair<Perm, std::uint64_t>> out;
  for (std::size_t c = 0; c < info.reps.size(); ++c)
    out.emplace_back(g.elements().perm(info.reps[c]), info.sizes[c]);
  return out;
}

std::vector<std::uint32_t> subgroup_closure(ElementTable const &t, std::vector<std::uint32_t> const &gens)
{
  std::vector<char> in(t.size(), 0);
  std::vector<std::uint32_t> elems{0};
  in[0] = 1;
  for (std::size_t q = 0; q < elems.size(); ++q) {
    for (auto s : gens) {
      auto const y = t.multiply(elems[q], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::uint32_t> normal_closure(PermGroup const &g, std::vector<std::uint32_t> const &gens)
{
  auto const &t = g.elements();
  auto const ggens = generator_indices(t);
  std::vector<std::uint32_t> sub_gens = gens;
  for (;;) {
    auto const h = subgroup_closure(t, sub_gens);
    std::vector<char> in(t.size(), 0);
    for (auto x : h)
      in[x] = 1;
    bool grown = false;
    for (std::size_t i = 0; i < sub_gens.size() && !grown; ++i) {
      for (auto gg : ggens) {
        auto const c = t.conjugate(sub_gens[i], gg);
        if (!in[c]) {
          sub_gens.push_back(c);
          grown = true;
          break;
        }
      }
    }
    if (!grown)
      return h;
  }
}

std::vector<std::uint32_t> derived_subgroup(PermGroup const &g)
{
  auto const &t = g.elements();
  auto const ggens = generator_indices(t);
  std::vector<std::uint32_t> comms;
  for (std::size_t i = 0; i < ggens.size(); ++i) {
    for (std::size_t j = i + 1; j < ggens.size(); ++j) {
      // a^-1 b^-1 a b
      auto const ab = t.multiply(ggens[i], ggens[j]);
      auto const ba = t.multiply(ggens[j], ggens[i]);
      auto const c = t.multiply(t.inverse(ba), ab);
      if (c != 0)
        comms.push_back(c);
    }
  }
  return normal_closure(g, comms);
}

PermGroup direct_product(PermGroup const &a, PermGroup const &b)
{
  std::size_t const degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (auto const &x : a.generators())
    gens.push_back(x.embedded(degree, 0));
  for (auto const &x : b.generators())
    gens.push_back(x.embedded(degree, a.degree()));
  PermGroup out(degree, std::move(gens));
  if (a.order_known() && b.order_known())
    out.set_known_order(a.order() * b.order());
  if (!a.name().empty() && !b.name().empty())
    out.set_name(a.name() + " x " + b.name());
  return out;
}

PermGroup direct_product(std::vector<PermGroup> const &factors)
{
  if (factors.empty())
    throw InvalidArgument("empty direct product");
  PermGroup out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = direct_product(out, factors[i]);
  return out;
}

PermGroup wreath_c2(PermGroup const &a)
{
  std::size_t const d = a.degree();
  std::size_t const degree = 2 * d;
  std::vector<Perm> gens;
  for (auto const &x : a.generators())
    gens.push_back(x.embedded(degree, 0));
  std::vector<Point> swap(degree);
  for (std::size_t i = 0; i < d; ++i) {
    swap[i] = static_cast<Point>(i + d);
    swap[i + d] = static_cast<Point>(i);
  }
  gens.emplace_back(std::move(swap));
  PermGroup out(degree, std::move(gens));
  if (a.order_known())
    out.set_known_order(2 * a.order() * a.order());
  if (!a.name().empty())
    out.set_name(a.name() + " wr C2");
  return out;
}

namespace {

std::int64_t mod(std::int64_t v, std::int64_t n)
{
  auto r = v % n;
  return r < 0 ? r + n : r;
}

std::uint32_t ipow(std::uint32_t n, std::uint32_t dim)
{
  std::uint32_t r = 1;
  for (std::uint32_t i = 0; i < dim; ++i)
    r *= n;
  return r;
}

Perm linear_perm(std::uint32_t n, std::uint32_t dim, ModMatrix const &m, std::size_t degree)
{
  std::uint32_t const npts = ipow(n, dim);
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::uint32_t v = 0; v < npts; ++v) {
    if (dim == 1) {
      img[v] = static_cast<Point>(mod(static_cast<std::int64_t>(v) * m.m[0], n));
    } else {
      std::int64_t const x = v % n;
      std::int64_t const y = v / n;
      std::int64_t const nx = mod(x * m.m[0] + y * m.m[2], n);
      std::int64_t const ny = mod(x * m.m[1] + y * m.m[3], n);
      img[v] = static_cast<Point>(nx + n * ny);
    }
  }
  try {
    return Perm(std::move(img));
  } catch (InvalidArgument const &) {
    throw SingularMatrix("action matrix is not invertible mod " + std::to_string(n));
  }
}

std::vector<Perm> translations(std::uint32_t n, std::uint32_t dim, std::size_t degree)
{
  std::uint32_t const npts = ipow(n, dim);
  std::vector<Perm> out;
  for (std::uint32_t axis = 0; axis < dim; ++axis) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::uint32_t v = 0; v < npts; ++v) {
      std::uint32_t x = v % n;
      std::uint32_t y = v / n;
      if (axis == 0)
        x = (x + 1) % n;
      else
        y = (y + 1) % n;
      img[v] = static_cast<Point>(x + n * y);
    }
    out.emplace_back(std::move(img));
  }
  return out;
}

} // namespace

PermGroup semidirect_p2(std::uint32_t p, std::vector<modular::Mat2> const &action)
{
  if (!modular::is_prime(p) || p < 3)
    throw InvalidArgument("p must be an odd prime");
  std::size_t const degree = static_cast<std::size_t>(p) * p;
  std::vector<Perm> gens;
  for (auto const &m : action) {
    if (m.p != p)
      throw InvalidArgument("matrix modulus mismatch");
    if (!m.invertible())
      throw SingularMatrix("action matrix " + m.to_string() + " is singular");
    gens.push_back(linear_perm(p, 2, ModMatrix::of(m.m[0], m.m[1], m.m[2], m.m[3]), degree));
  }
  auto const image = action.empty() ? std::vector<modular::Mat2>{modular::Mat2::identity(p)}
                                    : modular::mat2_group(p, action, limits().stored_cap);
  for (auto &t : translations(p, 2, degree))
    gens.push_back(std::move(t));
  PermGroup out(degree, std::move(gens));
  out.set_known_order(static_cast<std::uint64_t>(degree) * image.size());
  return out;
}

PermGroup affine_extension(std::uint32_t n, std::uint32_t dim, PermGroup const &acting,
                           std::vector<ModMatrix> const &actions)
{
  if (dim != 1 && dim != 2)
    throw InvalidArgument("dimension must be 1 or 2");
  if (n < 2)
    throw InvalidArgument("modulus must be at least 2");
  if (actions.size() != acting.generators().size())
    throw InvalidArgument("one action matrix per acting generator is required");
  std::uint32_t const npts = ipow(n, dim);
  std::uint64_t const t_order = acting.order();

  // Linear image of T; if it is as large as T the affine points suffice.
  std::vector<Perm> linear;
  for (auto const &m : actions)
    linear.push_back(linear_perm(n, dim, m, npts));
  std::uint64_t image_order = 1;
  if (!linear.empty())
    image_order = ElementTable(npts, linear, t_order + 1).size();
  bool const faithful = image_order == t_order;

  std::size_t const degree = faithful ? npts : npts + acting.degree();
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    Perm g = linear_perm(n, dim, actions[i], degree);
    if (!faithful)
      g = g * acting.generators()[i].embedded(degree, npts);
    gens.push_back(std::move(g));
  }
  for (auto &t : translations(n, dim, degree))
    gens.push_back(std::move(t));
  PermGroup out(degree, std::move(gens));
  out.set_known_order(static_cast<std::uint64_t>(npts) * t_order);
  return out;
}

PermGroup restrict_to(PermGroup const &g, std::vector<std::uint32_t> const &points)
{
  if (points.empty())
    throw InvalidArgument("cannot restrict to an empty point set");
  std::vector<std::uint32_t> pos(g.degree(), kNone);
  for (std::size_t i = 0; i < points.size(); ++i)
    pos.at(points[i]) = static_cast<std::uint32_t>(i);
  std::vector<Perm> gens;
  for (auto const &x : g.generators()) {
    std::vector<Point> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto const to = pos[x[points[i]]];
      if (to == kNone)
        throw InvalidArgument("point set is not a union of orbits");
      img[i] = static_cast<Point>(to);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(points.size(), std::move(gens), g.name());
}

std::vector<std::vector<std::uint32_t>> orbits(PermGroup const &g)
{
  std::size_t const n = g.degree();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> root = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto const &x : g.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto a = root(static_cast<std::uint32_t>(i));
      auto b = root(x[i]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> slot(n, kNone);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto const r = root(i);
    if (slot[r] == kNone) {
      slot[r] = static_cast<std::uint32_t>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

} // namespace octoprime
