#include "isoforge/perturb.hpp"

#include <algorithm>
#include <string>

#include "isoforge/error.hpp"
#include "isoforge/hull.hpp"

namespace isoforge {

namespace {

Int rat_ceil(const Rat &r) {
  const Int num = numerator(r);
  const Int den = denominator(r);  // always > 0
  Int q = num / den;
  if (q * den < num) ++q;
  return q;
}

Rat pair_sup(const RationalMetric &rho, const PairSet &pairs) {
  if (pairs.empty())
    throw Error(ErrorKind::Precondition, "empty pair set");
  Rat best = rho.at(pairs[0].first, pairs[0].second);
  for (const auto &[x, y] : pairs) best = rat_max(best, rho.at(x, y));
  return best;
}

bool contains_pair(const PairSet &pairs, int a, int b) {
  for (const auto &[x, y] : pairs)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

}  // namespace

BumpResult lip_bump(const RationalMetric &rho, int a, int b, const PairSet &k_set,
                    const Rat &eps, const std::vector<Rat> &forbidden) {
  if (eps <= 0)
    throw Error(ErrorKind::Precondition, "eps must be positive");
  if (a == b || a < 0 || b < 0 || a >= rho.degree() || b >= rho.degree())
    throw Error(ErrorKind::Precondition, "bad bump pair");
  if (contains_pair(k_set, a, b))
    throw Error(ErrorKind::InfeasibleSeparation,
                "the bump pair lies in the set it must stay below");

  const Rat rab = rho.at(a, b);
  const Rat mu = rho.min_positive_distance();
  Rat delta = rat_min(rat_min(eps, mu), rab) / 4;

  for (int round = 0; round < 200; ++round, delta /= 2) {
    const Rat c = rab - 2 * delta;  // span of the unscaled bump
    // lambda must exceed rab/c (so alpha > rho(a,b)) and keep
    // lambda*(1+delta) <= 1+eps.
    const Rat lo = rab / c;
    const Rat hi = (1 + eps) / (1 + delta);
    if (hi <= lo) continue;
    Int k_min = rat_ceil(1 / (hi - 1));
    if (k_min < 1) k_min = 1;
    for (Int k = k_min;; ++k) {
      const Rat lambda = 1 + Rat(1, k);
      if (lambda <= lo) break;  // shrank past the window; retry smaller delta
      if (lambda > hi) continue;
      const Rat alpha = lambda * c;
      if (std::find(forbidden.begin(), forbidden.end(), alpha) !=
          forbidden.end())
        continue;

      // delta < mu, so the delta-balls around a and b are singletons.
      MetricFunction u;
      u.values.resize(rho.degree());
      for (int y = 0; y < rho.degree(); ++y) {
        const Rat da = y == a ? Rat(0) : rho.at(y, a);
        const Rat db = y == b ? Rat(0) : rho.at(y, b);
        const Rat t1 = rat_min(da, c);
        const Rat t2 = rat_min(rat_min(da, db), c);
        u.values[y] = lambda * (t1 - delta * t2);
      }
      if (u.values[a] != 0 || u.values[b] != alpha)
        throw Error(ErrorKind::VerificationFailed, "bump endpoints are off");
      if (lip_constant(u, rho) > 1 + eps)
        throw Error(ErrorKind::VerificationFailed, "bump is not (1+eps)-Lip");
      for (const auto &[x, y] : k_set)
        if (rat_abs(u.values[x] - u.values[y]) >= alpha)
          throw Error(ErrorKind::VerificationFailed,
                      "bump does not stay below alpha on the guarded set");
      return BumpResult{alpha, delta, std::move(u)};
    }
  }
  throw Error(ErrorKind::InfeasibleSeparation,
              "no admissible bump scale after 200 refinements");
}

RationalMetric separate_pair_sets(const RationalMetric &rho, const PairSet &k_set,
                                  const PairSet &l_set, const Rat &eps,
                                  const std::vector<Rat> &forbidden) {
  const Rat sup_k = pair_sup(rho, k_set);
  const Rat sup_l = pair_sup(rho, l_set);
  if (sup_k != sup_l) return rho;

  std::pair<int, int> at{-1, -1};
  for (const auto &[x, y] : l_set)
    if (rho.at(x, y) == sup_l &&
        (at.first < 0 || std::pair<int, int>{x, y} < at))
      at = {x, y};
  const BumpResult bump = lip_bump(rho, at.first, at.second, k_set, eps,
                                   forbidden);

  const int n = rho.degree();
  std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      dist[x * n + y] =
          rat_max(rho.at(x, y), rat_abs(bump.u.values[x] - bump.u.values[y]));
    }
  return RationalMetric::from_entries(n, std::move(dist));
}

namespace {

// Value of an invariant metric on each pair class.
std::vector<Rat> class_values(const RationalMetric &rho,
                              const PairOrbitPartition &part) {
  std::vector<Rat> values;
  values.reserve(part.classes.size());
  for (const auto &cls : part.classes) {
    const Rat v = rho.at(cls[0].first, cls[0].second);
    for (const auto &[x, y] : cls)
      if (rho.at(x, y) != v)
        throw Error(ErrorKind::Precondition,
                    "metric is not constant on a pair class");
    values.push_back(v);
  }
  return values;
}

bool all_distinct(const std::vector<Rat> &values) {
  for (std::size_t j = 0; j < values.size(); ++j)
    for (std::size_t l = j + 1; l < values.size(); ++l)
      if (values[j] == values[l]) return false;
  return true;
}

RationalMetric separate_orbits_direct(const RationalMetric &d0,
                                      const PairOrbitPartition &part,
                                      const Rat &eps) {
  const int num_classes = static_cast<int>(part.classes.size());
  const std::vector<Rat> v = class_values(d0, part);
  Rat v_min = v[0];
  for (const Rat &x : v) v_min = rat_min(v_min, x);
  const Rat eta = eps * v_min / 2;

  // sigma_j in (1,2): the offsets eta*sigma form a band metric on their own,
  // so the sum with d0 satisfies the triangle inequality outright.
  std::vector<Rat> sigma(num_classes);
  const int denom = 4 * num_classes;
  for (int j = 0; j < num_classes; ++j) {
    for (int k = 1; k < denom; ++k) {
      const Rat cand = 1 + Rat(k, denom);
      bool ok = true;
      for (int l = 0; l < j && ok; ++l)
        ok = cand != sigma[l] && v[j] + eta * cand != v[l] + eta * sigma[l];
      if (ok) {
        sigma[j] = cand;
        break;
      }
    }
    if (sigma[j] == 0)
      throw Error(ErrorKind::InfeasibleSeparation,
                  "ran out of offset candidates");  // cannot happen: 2j < 4N-1
  }

  const int n = d0.degree();
  std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const int j = part.at(x, y);
      dist[x * n + y] = v[j] + eta * sigma[j];
    }
  return RationalMetric::from_entries(n, std::move(dist));
}

RationalMetric separate_orbits_paper(const RationalMetric &d0,
                                     const GroupAction &action,
                                     const PairOrbitPartition &part,
                                     const Rat &eps) {
  const int num_classes = static_cast<int>(part.classes.size());
  RationalMetric rho = d0;
  Rat s_prev = eps / 2;
  Rat bound(1);  // current upper corridor multiplier: rho <= bound * d0
  const int max_rounds = num_classes * (num_classes + 1);

  for (int round = 0; round < max_rounds; ++round) {
    const std::vector<Rat> v = class_values(rho, part);
    int clash_j = -1, clash_l = -1;
    for (int j = 0; j < num_classes && clash_j < 0; ++j)
      for (int l = j + 1; l < num_classes; ++l)
        if (v[j] == v[l]) {
          clash_j = j;
          clash_l = l;
          break;
        }
    if (clash_j < 0) return rho;

    // Budget: small enough that no previously distinct pair of class values
    // can merge (moves stay under half the least gap), and small enough that
    // the corridor product stays below 1+eps.
    Rat gap = s_prev;
    bool has_gap = false;
    for (int j = 0; j < num_classes; ++j)
      for (int l = j + 1; l < num_classes; ++l)
        if (v[j] != v[l]) {
          const Rat g = rat_abs(v[j] - v[l]);
          gap = has_gap ? rat_min(gap, g) : g;
          has_gap = true;
        }
    Rat big(1);
    for (const Rat &x : v) big = rat_max(big, x);
    Rat s = rat_min(s_prev, gap) / (16 * big);
    s = rat_min(s, ((1 + eps) / bound - 1) / 2);
    if (s <= 0)
      throw Error(ErrorKind::BudgetUnderflow,
                  "separation budget hit zero after " + std::to_string(round) +
                      " rounds");

    rho = invariantize(separate_pair_sets(rho, part.classes[clash_j],
                                          part.classes[clash_l], s, v),
                       action);
    bound *= 1 + s;
    s_prev = s;
  }
  throw Error(ErrorKind::InfeasibleSeparation,
              "class separation did not settle");
}

}  // namespace

RationalMetric separate_orbits(const RationalMetric &d0,
                               const GroupAction &action, const Rat &eps,
                               SeparationScheme scheme) {
  if (eps <= 0)
    throw Error(ErrorKind::Precondition, "eps must be positive");
  if (action.degree() != d0.degree())
    throw Error(ErrorKind::Precondition, "degree mismatch in separate_orbits");
  if (!is_invariant(d0, action))
    throw Error(ErrorKind::Precondition, "seed metric is not invariant");
  if (d0.degree() < 2) return d0;

  const PairOrbitPartition part = pair_classes(action);
  RationalMetric rho =
      part.classes.size() <= 1
          ? d0
          : (scheme == SeparationScheme::kDirect
                 ? separate_orbits_direct(d0, part, eps)
                 : separate_orbits_paper(d0, action, part, eps));

  if (!is_invariant(rho, action))
    throw Error(ErrorKind::VerificationFailed, "separated metric lost invariance");
  if (!all_distinct(class_values(rho, part)))
    throw Error(ErrorKind::VerificationFailed, "class values still collide");
  for (int x = 0; x < d0.degree(); ++x)
    for (int y = x + 1; y < d0.degree(); ++y)
      if (rho.at(x, y) < d0.at(x, y) ||
          rho.at(x, y) > (1 + eps) * d0.at(x, y))
        throw Error(ErrorKind::VerificationFailed,
                    "separated metric left the corridor");
  return rho;
}

RationalMetric break_symmetry(const RationalMetric &d, const FiniteGroup &g,
                              const Perm &f, const Rat &eps) {
  if (eps <= 0)
    throw Error(ErrorKind::Precondition, "eps must be positive");
  if (d.degree() != g.order() || f.degree() != g.order())
    throw Error(ErrorKind::Precondition, "degree mismatch in break_symmetry");
  const GroupAction left = GroupAction::left_translations(g);
  if (!is_invariant(d, left))
    throw Error(ErrorKind::Precondition, "metric is not left-invariant");

  bool isometry = true;
  for (int x = 0; x < d.degree() && isometry; ++x)
    for (int y = x + 1; y < d.degree(); ++y)
      if (d.at(f[x], f[y]) != d.at(x, y)) {
        isometry = false;
        break;
      }
  if (!isometry) return d;  // f already fails to preserve d

  const PairOrbitPartition part = pair_classes(left);
  int wa = -1, wb = -1;
  for (int x = 0; x < d.degree() && wa < 0; ++x)
    for (int y = 0; y < d.degree(); ++y)
      if (x != y && part.at(f[x], f[y]) != part.at(x, y)) {
        wa = x;
        wb = y;
        break;
      }
  if (wa < 0)
    throw Error(ErrorKind::NotOutsideHull,
                "the map preserves every pair class");

  // Push the class of (f(wa),f(wb)) above the class of (wa,wb); f preserved
  // d, so the two class values coincide and the separation step engages.
  const PairSet &image_class = part.classes[part.at(f[wa], f[wb])];
  const PairSet &source_class = part.classes[part.at(wa, wb)];
  RationalMetric rho = invariantize(
      separate_pair_sets(d, source_class, image_class, eps, {}), left);

  if (rho.at(f[wa], f[wb]) <= rho.at(wa, wb))
    throw Error(ErrorKind::VerificationFailed,
                "symmetry breaking did not raise the image pair");
  return rho;
}

}  // namespace isoforge
