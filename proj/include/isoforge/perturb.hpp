#pragma once

#include <utility>
#include <vector>

#include "isoforge/metric.hpp"

namespace isoforge {

using PairSet = std::vector<std::pair<int, int>>;

/// Witnesses for the bump function:
///   (L1) lip(u) <= 1+eps and the range of u spans at most alpha,
///   (L2) |u(x)-u(y)| = alpha > rho(x,y) on B(a,delta) x B(b,delta),
///   (L3) max over K of |u(x)-u(y)| < alpha.
struct BumpResult {
  Rat alpha;
  Rat delta;
  MetricFunction u;
};

// u_delta(y) = min(dist(y,A_d), c_d) - delta*min(dist(y,A_d), dist(y,B_d), c_d)
// with A_d, B_d the closed delta-balls around a and b, c_d = rho(a,b)-2*delta,
// scaled by the smallest rational lambda = 1 + 1/k with lambda*(1+delta) <=
// 1+eps and alpha = lambda*c_d outside `forbidden`.
BumpResult lip_bump(const RationalMetric &rho, int a, int b, const PairSet &k_set,
                    const Rat &eps, const std::vector<Rat> &forbidden);

// Separation step: returns rho unchanged when the two sups already differ,
// otherwise max(rho, |u(x)-u(y)|) for the bump at the lexicographically
// smallest sup-achieving pair of l_set.
RationalMetric separate_pair_sets(const RationalMetric &rho, const PairSet &k_set,
                                  const PairSet &l_set, const Rat &eps,
                                  const std::vector<Rat> &forbidden);

enum class SeparationScheme { kPaper, kDirect };

// An invariant metric rho with d0 <= rho <= (1+eps)*d0 taking pairwise
// distinct values on distinct pair classes. d0 must already be invariant.
RationalMetric separate_orbits(const RationalMetric &d0, const GroupAction &action,
                               const Rat &eps, SeparationScheme scheme);

// Symmetry breaking: a left-invariant metric rho with
// d <= rho <= (1+eps)*d and f not an isometry of rho. Requires f outside
// hull(L(G)); throws NotOutsideHull otherwise.
RationalMetric break_symmetry(const RationalMetric &d, const FiniteGroup &g,
                              const Perm &f, const Rat &eps);

}  // namespace isoforge
