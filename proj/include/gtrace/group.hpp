#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gtrace/limits.hpp"
#include "gtrace/permutation.hpp"

namespace gtrace {

/// Index of an element in its group's canonical element list.
using ElemIdx = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Finite permutation group with a fully materialized element list.
///
/// Elements are kept in lexicographic order of their image sequences, so the
/// identity always has index 0 and every index is reproducible across runs.
/// Multiplication and inversion go through precomputed tables.
class Group {
 public:
  /// Closure of `generators` (all of degree `degree`). Throws InputError on mixed
  /// degrees and ResourceLimit when the closure outgrows `limits.max_group_order`.
  static GroupPtr from_generators(std::vector<Permutation> generators, std::uint32_t degree,
                                  const Limits& limits = {}, std::string name = {});

  std::uint32_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElemIdx i) const { return elements_[i]; }

  static constexpr ElemIdx identity() { return 0; }
  ElemIdx mul(ElemIdx a, ElemIdx b) const { return mul_[static_cast<std::size_t>(a) * order() + b]; }
  ElemIdx inv(ElemIdx a) const { return inv_[a]; }
  ElemIdx conj(ElemIdx g, ElemIdx h) const { return mul(mul(g, h), inv(g)); }
  std::uint64_t element_order(ElemIdx a) const { return orders_[a]; }

  /// Index of `p`; throws InputError if `p` is not in the group.
  ElemIdx index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const;

  std::string format(ElemIdx a) const { return elements_[a].to_cycles(); }

 private:
  Group() = default;

  std::string name_;
  std::uint32_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<ElemIdx> mul_;
  std::vector<ElemIdx> inv_;
  std::vector<std::uint64_t> orders_;
};

/// Named groups: Cn, Dn (order 2n, n >= 3), V4, S3, S4, A4, Q8.
/// Q8 is its regular representation on 8 points.
GroupPtr catalog(std::string_view name, const Limits& limits = {});

/// Subgroup of a materialized group, stored as its sorted element indices.
class Subgroup {
 public:
  /// Validates closure; throws InputError if `elements` is not a subgroup.
  Subgroup(GroupPtr parent, std::vector<ElemIdx> elements);

  static Subgroup whole(const GroupPtr& g);
  static Subgroup trivial(const GroupPtr& g);
  static Subgroup generated_by(const GroupPtr& g, const std::vector<ElemIdx>& gens);
  static Subgroup generated_by(const GroupPtr& g, const std::vector<Permutation>& gens);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<ElemIdx>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t index() const { return parent_->order() / order(); }
  bool contains(ElemIdx g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }
  bool is_trivial() const { return order() == 1; }

  /// Greedy generating set: least elements not already generated.
  std::vector<ElemIdx> generators() const;
  /// "<(1 2), (3 4)>" style rendering of generators().
  std::string format() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  GroupPtr parent_;
  std::vector<ElemIdx> elements_;
};

/// Canonical subgroup order: by order, then by sorted element list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

/// One subgroup from each conjugacy class of prime-order subgroups: the canonically
/// least member of each class, classes listed in canonical order.
std::vector<Subgroup> prime_order_subgroup_classes(const GroupPtr& g);

/// Least element of each left coset gH, ascending.
std::vector<ElemIdx> left_transversal(const GroupPtr& g, const Subgroup& h);
/// Least element of each right coset Hg, ascending.
std::vector<ElemIdx> right_transversal(const GroupPtr& g, const Subgroup& h);
/// coset_of[x] = position in left_transversal of the coset xH.
std::vector<std::uint32_t> left_coset_table(const GroupPtr& g, const Subgroup& h);

Subgroup conjugate_subgroup(ElemIdx g, const Subgroup& h);
bool are_conjugate(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& h);

/// A Sylow p-subgroup, found by extending p-subgroups one element at a time.
/// Exponential in the worst case; meant for small groups.
Subgroup sylow_subgroup(const GroupPtr& g, std::uint64_t p);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace gtrace
