#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "isoforge/metric.hpp"
#include "isoforge/perturb.hpp"

namespace isoforge {

struct RigidityReport {
  RationalMetric metric = RationalMetric::discrete(1);
  long realized_group_order = 0;  // = |hull(acting group)|
  bool exact = false;             // hull(G) = G
  std::pair<Rat, Rat> corridor;   // (1, 1+eps) multipliers over the seed
  bool verified = false;          // the isometry oracle ran and agreed
};

// Headline synthesis: a metric whose isometry group is exactly the hull of
// the acting group. Throws ForbiddenCardinality for (|G|, |X|) = (1, 2).
RigidityReport rigid_metric(const GroupAction &action,
                            const std::optional<RationalMetric> &seed,
                            const Rat &eps, SeparationScheme scheme, bool verify,
                            std::int64_t budget = kDefaultSearchBudget);

struct FreeConditionReport {
  bool free_at_omega = false;
  bool effective_off_orbit = false;
  bool transitive = false;
};

FreeConditionReport check_free_conditions(const GroupAction &action, int omega);

// The action a.(g,x) = (ag, x) on G x {0..m-1}; point (g, i) has index g*m+i.
GroupAction product_action(const FiniteGroup &g, int m);

std::pair<RigidityReport, GroupAction> product_rigid(
    const FiniteGroup &g, int m, const Rat &eps, bool verify,
    std::int64_t budget = kDefaultSearchBudget);

// The action on X ⊔ G: a.x on the X part, left translation on the G part.
// X points keep their indices; group element g sits at degree(X)+g.
GroupAction disjoint_union_action(const GroupAction &action);

std::pair<RigidityReport, GroupAction> disjoint_union_rigid(
    const GroupAction &action, const Rat &eps, bool verify,
    std::int64_t budget = kDefaultSearchBudget);

RigidityReport abelian_rigid(const FiniteGroup &h, const Rat &eps, bool verify,
                             std::int64_t budget = kDefaultSearchBudget);

struct DensityReport {
  int trials = 0;
  int trivial_count = 0;
  Rat fraction;
  // Every sampled metric, perturbed by the trivial-group rigidifier inside
  // the (1+eps) corridor, ends with a trivial isometry group.
  bool corridor_all_trivial = false;
};

// Independent uniform rationals with denominator 1000 in [1,2) per pair;
// triangle inequality is automatic in that band.
RationalMetric random_band_metric(int degree, std::mt19937_64 &rng);

DensityReport density_trial(int m, int trials, std::uint64_t rng_seed);

}  // namespace isoforge
