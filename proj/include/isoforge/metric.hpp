#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "isoforge/group.hpp"
#include "isoforge/hull.hpp"
#include "isoforge/rational.hpp"

namespace isoforge {

/// An exact metric on {0..degree-1}.
class RationalMetric {
 public:
  // Validates symmetry, positivity off the diagonal, zero diagonal and the
  // triangle inequality; errors name the first violating witness.
  static RationalMetric validate(const std::vector<std::vector<Rat>> &matrix);

  // For internally constructed matrices whose validity is established by
  // construction; still validated, the call exists for intent only.
  static RationalMetric from_entries(int degree, std::vector<Rat> dist);

  static RationalMetric discrete(int degree);

  int degree() const { return degree_; }
  const Rat &at(int x, int y) const { return dist_[x * degree_ + y]; }

  Rat min_positive_distance() const;

  friend bool operator==(const RationalMetric &a,
                         const RationalMetric &b) = default;

 private:
  RationalMetric() = default;
  int degree_ = 0;
  std::vector<Rat> dist_;
};

struct MetricFunction {
  std::vector<Rat> values;  // one per point
};

// sup |f(x)-f(y)| / d(x,y) over off-diagonal pairs; 0 on fewer than 2 points.
Rat lip_constant(const MetricFunction &f, const RationalMetric &d);
Rat lip_constant(const Perm &f, const RationalMetric &d);

// rho_G(x,y) = max over g of rho(g.x, g.y). Idempotent, monotone, constant on
// pair classes.
RationalMetric invariantize(const RationalMetric &rho, const GroupAction &action);

bool is_invariant(const RationalMetric &rho, const GroupAction &action);

// Least C with |rho1 - rho2| <= C * d.
Rat lambda_distance(const RationalMetric &rho1, const RationalMetric &rho2,
                    const RationalMetric &d);

// Brute-force oracle: all distance-preserving permutations, with
// partition-refinement pruning. Deterministic sorted output.
std::vector<Perm> isometry_perms(const RationalMetric &d,
                                 std::int64_t budget = kDefaultSearchBudget);

// The oracle packaged as a group with its tautological action.
std::pair<FiniteGroup, GroupAction> isometry_group(
    const RationalMetric &d, std::int64_t budget = kDefaultSearchBudget);

}  // namespace isoforge
