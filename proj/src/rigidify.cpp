#include "isoforge/rigidify.hpp"

#include <algorithm>
#include <string>

#include "isoforge/error.hpp"

namespace isoforge {

RigidityReport rigid_metric(const GroupAction &action,
                            const std::optional<RationalMetric> &seed,
                            const Rat &eps, SeparationScheme scheme, bool verify,
                            std::int64_t budget) {
  if (action.group().order() == 1 && action.degree() == 2)
    throw Error(ErrorKind::ForbiddenCardinality,
                "a 2-point space always has the swap as an isometry");
  if (seed && seed->degree() != action.degree())
    throw Error(ErrorKind::Precondition, "seed degree mismatch");

  const RationalMetric base =
      seed ? *seed : RationalMetric::discrete(action.degree());
  const RationalMetric d0 = invariantize(base, action);
  const RationalMetric rho = separate_orbits(d0, action, eps, scheme);

  HullSet hull = symmetrized_hull(action, budget);

  RigidityReport report;
  report.metric = rho;
  report.realized_group_order = static_cast<long>(hull.maps.size());
  report.exact = hull.closed;
  report.corridor = {Rat(1), 1 + eps};
  if (verify) {
    const std::vector<Perm> oracle = isometry_perms(rho, budget);
    if (oracle != hull.maps)
      throw Error(ErrorKind::VerificationFailed,
                  "oracle found " + std::to_string(oracle.size()) +
                      " isometries, hull has " +
                      std::to_string(hull.maps.size()));
    report.verified = true;
  }
  return report;
}

FreeConditionReport check_free_conditions(const GroupAction &action, int omega) {
  if (omega < 0 || omega >= action.degree())
    throw Error(ErrorKind::Precondition, "omega out of range");
  FreeConditionReport report;
  report.transitive = action.transitive();

  report.free_at_omega = true;
  for (int g = 0; g < action.group().order(); ++g)
    if (g != action.group().identity() && action.apply(g, omega) == omega) {
      report.free_at_omega = false;
      break;
    }

  const std::vector<int> orb = action.orbit(omega);
  std::vector<char> in_orbit(action.degree(), 0);
  for (int x : orb) in_orbit[x] = 1;
  report.effective_off_orbit = true;
  for (int g = 0; g < action.group().order(); ++g) {
    if (g == action.group().identity()) continue;
    bool fixes_complement = true;
    for (int x = 0; x < action.degree(); ++x)
      if (!in_orbit[x] && action.apply(g, x) != x) {
        fixes_complement = false;
        break;
      }
    if (fixes_complement) {
      report.effective_off_orbit = false;
      break;
    }
  }
  return report;
}

GroupAction product_action(const FiniteGroup &g, int m) {
  if (m < 1) throw Error(ErrorKind::Precondition, "need at least one copy");
  const int degree = g.order() * m;
  std::vector<std::vector<int>> map(g.order(), std::vector<int>(degree));
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x)
      for (int i = 0; i < m; ++i) map[a][x * m + i] = g.mul(a, x) * m + i;
  return GroupAction::create(g, degree, std::move(map));
}

namespace {

void assert_hull_closed(const GroupAction &action, std::int64_t budget,
                        const char *what) {
  if (!is_hull_closed(action, budget))
    throw Error(ErrorKind::VerificationFailed,
                std::string(what) + " action is not hull-closed");
}

void assert_free(const GroupAction &action) {
  for (int g = 0; g < action.group().order(); ++g) {
    if (g == action.group().identity()) continue;
    for (int x = 0; x < action.degree(); ++x)
      if (action.apply(g, x) == x)
        throw Error(ErrorKind::VerificationFailed,
                    "action is not free at point " + std::to_string(x));
  }
}

}  // namespace

std::pair<RigidityReport, GroupAction> product_rigid(const FiniteGroup &g, int m,
                                                     const Rat &eps, bool verify,
                                                     std::int64_t budget) {
  if (g.order() == 1 && m == 2)
    throw Error(ErrorKind::ForbiddenCardinality,
                "trivial group on 2 points is the exceptional pair");
  GroupAction action = product_action(g, m);
  assert_free(action);
  assert_hull_closed(action, budget, "product");
  RigidityReport report = rigid_metric(action, std::nullopt, eps,
                                       SeparationScheme::kDirect, verify, budget);
  if (report.realized_group_order != g.order())
    throw Error(ErrorKind::VerificationFailed,
                "product construction realized order " +
                    std::to_string(report.realized_group_order) +
                    ", expected " + std::to_string(g.order()));
  return {std::move(report), std::move(action)};
}

GroupAction disjoint_union_action(const GroupAction &action) {
  const FiniteGroup &g = action.group();
  const int deg_x = action.degree();
  const int degree = deg_x + g.order();
  std::vector<std::vector<int>> map(g.order(), std::vector<int>(degree));
  for (int a = 0; a < g.order(); ++a) {
    for (int x = 0; x < deg_x; ++x) map[a][x] = action.apply(a, x);
    for (int x = 0; x < g.order(); ++x) map[a][deg_x + x] = deg_x + g.mul(a, x);
  }
  return GroupAction::create(g, degree, std::move(map));
}

std::pair<RigidityReport, GroupAction> disjoint_union_rigid(
    const GroupAction &action, const Rat &eps, bool verify,
    std::int64_t budget) {
  if (action.degree() < 2)
    throw Error(ErrorKind::Precondition, "need at least two base points");
  GroupAction whole = disjoint_union_action(action);
  assert_hull_closed(whole, budget, "disjoint union");
  RigidityReport report = rigid_metric(whole, std::nullopt, eps,
                                       SeparationScheme::kDirect, verify, budget);
  if (report.realized_group_order != action.group().order())
    throw Error(ErrorKind::VerificationFailed,
                "union construction realized order " +
                    std::to_string(report.realized_group_order) +
                    ", expected " + std::to_string(action.group().order()));
  return {std::move(report), std::move(whole)};
}

RigidityReport abelian_rigid(const FiniteGroup &h, const Rat &eps, bool verify,
                             std::int64_t budget) {
  const StructureReport st = h.structure();
  if (!st.abelian)
    throw Error(ErrorKind::Precondition, "group is not abelian");
  RigidityReport report =
      rigid_metric(GroupAction::left_translations(h), std::nullopt, eps,
                   SeparationScheme::kDirect, verify, budget);
  const long expected = st.boolean ? h.order() : 2L * h.order();
  if (report.realized_group_order != expected)
    throw Error(ErrorKind::VerificationFailed,
                "abelian hull has order " +
                    std::to_string(report.realized_group_order) +
                    ", expected " + std::to_string(expected));
  return report;
}

RationalMetric random_band_metric(int degree, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> numerator(1000, 1999);
  const int n = degree;
  std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const Rat v(numerator(rng), 1000);
      dist[x * n + y] = v;
      dist[y * n + x] = v;
    }
  return RationalMetric::from_entries(n, std::move(dist));
}

DensityReport density_trial(int m, int trials, std::uint64_t rng_seed) {
  if (m < 3) throw Error(ErrorKind::Precondition, "need at least 3 points");
  std::mt19937_64 rng(rng_seed);
  const FiniteGroup trivial = FiniteGroup::from_cayley({{0}}, 0);
  std::vector<int> id_row(m);
  for (int x = 0; x < m; ++x) id_row[x] = x;
  const GroupAction trivial_action = GroupAction::create(trivial, m, {id_row});

  DensityReport report;
  report.trials = trials;
  report.corridor_all_trivial = true;
  for (int t = 0; t < trials; ++t) {
    const RationalMetric d = random_band_metric(m, rng);
    if (isometry_perms(d).size() == 1) ++report.trivial_count;
    const RigidityReport rigid =
        rigid_metric(trivial_action, d, Rat(1, 10), SeparationScheme::kDirect,
                     /*verify=*/false);
    if (isometry_perms(rigid.metric).size() != 1)
      report.corridor_all_trivial = false;
  }
  report.fraction = trials == 0 ? Rat(0) : Rat(report.trivial_count, trials);
  return report;
}

}  // namespace isoforge
