#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "octoprime/modular.hpp"
#include "octoprime/parallel.hpp"
#include "octoprime/perm.hpp"

namespace octoprime {

/// Process-wide size bounds. Set once at startup (the CLI does this from flags).
struct Limits
{
  std::size_t stored_cap = 200000;
  /// bound on elements * degree * sizeof(Point) for a stored table
  std::size_t stored_bytes_cap = std::size_t{3} << 30;
  std::uint64_t counting_cap = 25000000;
  std::size_t aut_realization_cap = 200000;
  std::uint64_t iso_threshold = 5000;
};

Limits &limits();

inline constexpr std::uint32_t kNone = ~std::uint32_t{0};

/// All elements of a permutation group, numbered in breadth-first order from
/// the identity (index 0). Every element i other than the identity satisfies
/// element(i) = element(parent(i)) * generator(parent_gen(i)).
class ElementTable
{
public:
  /// Throws LimitExceeded once more than `max_order` elements appear.
  ElementTable(std::size_t degree, std::vector<Perm> const &generators, std::size_t max_order);

  std::uint32_t size() const noexcept { return size_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t generator_count() const noexcept { return ngens_; }

  std::span<Point const> element(std::uint32_t i) const noexcept
  {
    return {data_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Perm perm(std::uint32_t i) const;

  /// Index of the element with these images, or kNone.
  std::uint32_t find(std::span<Point const> images) const;
  std::uint32_t find(Perm const &x) const { return find(x.images()); }
  /// Throws NotFound if absent.
  std::uint32_t index_of(Perm const &x) const;
  bool contains(Perm const &x) const { return find(x) != kNone; }

  std::uint32_t mul_gen(std::uint32_t i, std::size_t g) const noexcept { return mul_gen_[static_cast<std::size_t>(i) * ngens_ + g]; }
  std::uint32_t parent(std::uint32_t i) const noexcept { return parent_[i]; }
  std::uint32_t parent_gen(std::uint32_t i) const noexcept { return parent_gen_[i]; }
  std::uint32_t inverse(std::uint32_t i) const noexcept { return inverse_[i]; }

  /// element(i) * element(j)
  std::uint32_t multiply(std::uint32_t i, std::uint32_t j) const;
  /// element(j)^-1 * element(i) * element(j)
  std::uint32_t conjugate(std::uint32_t i, std::uint32_t j) const;
  /// Generator indices w with element(i) = g[w0] * g[w1] * ...
  std::vector<std::uint32_t> word(std::uint32_t i) const;

private:
  std::size_t degree_;
  std::size_t ngens_;
  std::uint32_t size_ = 0;
  std::vector<Point> data_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint32_t> mul_gen_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::uint32_t> inverse_;

  std::size_t hash(Point const *p) const;
  std::uint32_t find_raw(Point const *p) const;
  void insert_slot(std::uint32_t index);
  void grow_slots();
};

/// Element orders, serial reference.
std::vector<std::uint32_t> element_orders_serial(ElementTable const &t);
/// Element orders, OpenMP kernel. Same result as the serial version.
std::vector<std::uint32_t> element_orders_parallel(ElementTable const &t);

struct ClassInfo
{
  std::vector<std::uint32_t> class_of;
  /// Smallest element index in each class; classes are numbered by it.
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> sizes;
};

ClassInfo conjugacy_classes_serial(ElementTable const &t);
ClassInfo conjugacy_classes_parallel(ElementTable const &t);

/// A permutation group given by generators. Element table, orders and class
/// data are computed on first use and shared between copies.
class PermGroup
{
public:
  PermGroup();
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::string name = {});

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Perm> const &generators() const noexcept { return gens_; }
  std::string const &name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Order, from the constructor's claim if one was recorded, else from the
  /// element table.
  std::uint64_t order() const;
  bool order_known() const;
  /// Records an order established by construction; lets counting-only flows
  /// skip the element table.
  void set_known_order(std::uint64_t n);

  ElementTable const &elements() const;
  std::vector<std::uint32_t> const &element_orders() const;
  ClassInfo const &classes() const;

  Perm identity() const { return Perm(degree_); }
  bool contains(Perm const &x) const { return elements().contains(x); }
  bool is_abelian() const;

private:
  struct Cache;
  std::size_t degree_ = 1;
  std::vector<Perm> gens_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

/// Breadth-first product closure, sorted. Throws LimitExceeded past max_order.
std::vector<Perm> closure(std::vector<Perm> const &gens, std::size_t max_order);

std::vector<Perm> center(PermGroup const &g);
std::vector<std::uint32_t> center_indices(PermGroup const &g);

/// (representative, class size); representative is the class's first element
/// in table order.
std::vector<std::pair<Perm, std::uint64_t>> conjugacy_classes(PermGroup const &g);

/// Element indices of the subgroup generated by the given element indices.
std::vector<std::uint32_t> subgroup_closure(ElementTable const &t, std::vector<std::uint32_t> const &gens);

/// Element indices of the normal closure of the given elements.
std::vector<std::uint32_t> normal_closure(PermGroup const &g, std::vector<std::uint32_t> const &gens);

/// Element indices of [G,G].
std::vector<std::uint32_t> derived_subgroup(PermGroup const &g);

PermGroup direct_product(PermGroup const &a, PermGroup const &b);
PermGroup direct_product(std::vector<PermGroup> const &factors);

/// (A x A) @ C2 with C2 swapping the coordinates.
PermGroup wreath_c2(PermGroup const &a);

/// (C_p x C_p) @ <action>, acting on p^2 points by v -> v*M + t.
PermGroup semidirect_p2(std::uint32_t p, std::vector<modular::Mat2> const &action);

/// Integer matrix acting on row vectors of (Z_n)^dim, dim 1 or 2, row-major.
struct ModMatrix
{
  std::array<std::int64_t, 4> m{1, 0, 0, 1};

  static ModMatrix scalar(std::int64_t s) { return {{s, 0, 0, s}}; }
  static ModMatrix of(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11)
  {
    return {{m00, m01, m10, m11}};
  }
};

/// (Z_n)^dim @ T where generator i of `acting` acts on the normal subgroup by
/// v -> v * actions[i]. Generators of the result: those of T (in order), then
/// the unit translations. Points: n^dim affine points, followed by T's own
/// points unless the affine action alone is already faithful.
PermGroup affine_extension(std::uint32_t n, std::uint32_t dim, PermGroup const &acting,
                           std::vector<ModMatrix> const &actions);

/// The group induced on a union of orbits, with points renumbered in the
/// given order. `points` must be a union of orbits.
PermGroup restrict_to(PermGroup const &g, std::vector<std::uint32_t> const &points);

/// Orbits of the generators on 0..degree-1, each sorted, ordered by least point.
std::vector<std::vector<std::uint32_t>> orbits(PermGroup const &g);

} // namespace octoprime
