#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoforge/doubling.hpp"
#include "isoforge/hull.hpp"

namespace isoforge {

enum class GroupCase {
  kIsoGroup,     // (a): hull of left translations is the translations alone
  kMiddle,       // (b): hull-at-identity of size 2
  kIsoSingular,  // (c): hull-at-identity of size 8, inversion inside
};

const char *group_case_name(GroupCase c);

struct Classification {
  GroupCase group_case = GroupCase::kIsoGroup;
  HullSet hull_e;
  std::optional<DoubleStructure> structural_witness;  // cases (b)/(c)
  std::optional<DoubleStructure> inner_double;        // case (c) only
  bool kappa_in_hull = false;
};

// Computes both the structural route (Boolean / abelian / double recognition)
// and the hull route (|hull_e| in {1,2,8}); throws RouteMismatch if they
// disagree.
Classification classify(const FiniteGroup &g,
                        std::int64_t budget = kDefaultSearchBudget);

struct AdmitsReport {
  bool admits = false;           // case (a)
  bool boolean_condition = false;
  bool no_double_condition = false;
  // Finite version of the sufficient criterion: non-abelian with trivial or
  // non-Boolean center.
  bool center_criterion = false;
};

AdmitsReport admits_left_rigid(const FiniteGroup &g,
                               std::int64_t budget = kDefaultSearchBudget);

// True iff every left-invariant pseudometric is right-invariant: abelian or
// iso-singular, cross-checked against the pairwise square/commute predicate.
bool biinvariant_only(const FiniteGroup &g,
                      std::int64_t budget = kDefaultSearchBudget);

struct CensusEntry {
  std::string name;
  long order = 0;
  long exponent = 0;
};

struct CensusReport {
  std::vector<CensusEntry> iso_singular;  // the case-(c) members
  bool all_exponent_four = false;
  bool same_order_isomorphic = false;
  bool is_family_orders_match = false;  // IS(n) has order 2^(n+2)
};

CensusReport iso_singular_census(const std::vector<ZooEntry> &groups,
                                 std::int64_t budget = kDefaultSearchBudget);

}  // namespace isoforge
