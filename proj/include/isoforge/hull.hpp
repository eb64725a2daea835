#pragma once

#include <cstdint>
#include <vector>

#include "isoforge/group.hpp"

namespace isoforge {

/// Orbit partition of off-diagonal ordered pairs under the diagonal action
/// together with the coordinate swap. Class ids follow the lexicographically
/// smallest contained pair.
struct PairOrbitPartition {
  int degree = 0;
  std::vector<int> class_of;  // degree x degree, -1 on the diagonal
  std::vector<std::vector<std::pair<int, int>>> classes;

  int at(int x, int y) const { return class_of[x * degree + y]; }
};

struct HullSet {
  std::vector<Perm> maps;  // canonically sorted
  bool closed = false;     // equals the generating family
};

inline constexpr std::int64_t kDefaultSearchBudget = 10'000'000;

std::int64_t search_budget_from_env(std::int64_t fallback = kDefaultSearchBudget);

PairOrbitPartition pair_classes(const GroupAction &action);

// All maps u with (u(x),u(y)) in the pair class of (x,y) for x != y and
// u(x) in the orbit of x. Backtracking over point images with per-pair
// pruning; bijectivity of every member is asserted.
HullSet symmetrized_hull(const GroupAction &action,
                         std::int64_t budget = kDefaultSearchBudget);

// Pairwise-only membership test (the diagonal condition u(x) in G.x dropped).
// Coincides with full membership except for the (1,2) exceptional case.
bool pairwise_hull_member(const GroupAction &action, const Perm &u);

// {f in hull(L(G)) : f(e) = e}, searched over orientation choices
// f(x) in {x, x^-1} per inverse-pair. Always a Boolean group.
HullSet hull_at_identity(const FiniteGroup &g,
                         std::int64_t budget = kDefaultSearchBudget);

bool is_hull_closed(const GroupAction &action,
                    std::int64_t budget = kDefaultSearchBudget);

}  // namespace isoforge
