#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isoforge/perm.hpp"

namespace isoforge {

struct StructureReport {
  bool abelian = false;
  bool boolean = false;
  long exponent = 1;
  std::vector<int> center;   // sorted element indices
  std::vector<int> squares;  // sorted, {x^2 : x in G}
};

/// A finite group given by a Cayley table over opaque element indices.
class FiniteGroup {
 public:
  // Empty placeholder; every usable instance comes from from_cayley.
  FiniteGroup() = default;

  // Validates the full axiom set; errors name the first violating witness.
  static FiniteGroup from_cayley(const std::vector<std::vector<int>> &table,
                                 int identity);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int b) const {  // a b a^-1
    return mul(mul(a, b), inv_[a]);
  }

  int element_order(int g) const;
  StructureReport structure() const;

  // Closure of a subset under product (and hence inverse).
  std::vector<int> subgroup_closure(const std::vector<int> &generators) const;

  // All subgroups of index exactly 2, canonically ordered. Empty for odd order.
  std::vector<std::vector<int>> index2_subgroups() const;

  // Cayley table of the subgroup spanned by `elements` (must be closed),
  // reindexed by position; second result maps new index -> old element.
  std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(
      const std::vector<int> &elements) const;

  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b) = default;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // order x order, row-major
  std::vector<int> inv_;
};

/// An effective action of a FiniteGroup on {0..degree-1}.
class GroupAction {
 public:
  // Validates: identity acts trivially, homomorphism law, effectiveness.
  static GroupAction create(FiniteGroup group, int degree,
                            std::vector<std::vector<int>> map);

  static GroupAction left_translations(const FiniteGroup &group);

  const FiniteGroup &group() const { return group_; }
  int degree() const { return degree_; }
  int apply(int g, int x) const { return map_[g * degree_ + x]; }
  Perm perm(int g) const;
  std::vector<Perm> perms() const;

  // Sorted orbit of a point.
  std::vector<int> orbit(int x) const;
  bool transitive() const;

 private:
  GroupAction() = default;
  FiniteGroup group_;
  int degree_ = 0;
  std::vector<int> map_;  // order x degree
};

inline constexpr int kDefaultClosureCap = 20000;
inline constexpr int kDefaultIsomorphismCap = 200;

// Closure of a generating set of permutations, elements ordered by
// breadth-first discovery from the identity; the action is tautological.
std::pair<FiniteGroup, GroupAction> group_from_generators(
    const std::vector<Perm> &generators, int degree,
    int order_cap = kDefaultClosureCap);

// First isomorphism under canonical element order, or nullopt.
std::optional<std::vector<int>> find_isomorphism(
    const FiniteGroup &g, const FiniteGroup &h,
    int order_cap = kDefaultIsomorphismCap);

// Same, but the isomorphism is required to map `pin_from` to `pin_to`.
std::optional<std::vector<int>> find_isomorphism_pinned(
    const FiniteGroup &g, const FiniteGroup &h, int pin_from, int pin_to,
    int order_cap = kDefaultIsomorphismCap);

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);

}  // namespace isoforge
