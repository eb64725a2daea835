// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact rational equalities; time limits are
// wall-clock seconds pinned per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "isoforge/classify.hpp"
#include "isoforge/doubling.hpp"
#include "isoforge/error.hpp"
#include "isoforge/hull.hpp"
#include "isoforge/io.hpp"
#include "isoforge/metric.hpp"
#include "isoforge/perturb.hpp"
#include "isoforge/rigidify.hpp"

using namespace isoforge;

namespace {

int g_failures = 0;

void report(int number, const std::string &what, bool ok,
            const std::string &detail = "") {
  std::printf("criterion %2d %-52s %s%s%s\n", number, what.c_str(),
              ok ? "PASS" : "FAIL", detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int number, const std::string &what, Fn fn) {
  try {
    std::string detail;
    const bool ok = fn(detail);
    report(number, what, ok, ok ? detail : detail);
  } catch (const std::exception &e) {
    report(number, what, false, e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

GroupAction trivial_action(int degree) {
  std::vector<int> row(degree);
  std::iota(row.begin(), row.end(), 0);
  return GroupAction::create(FiniteGroup::from_cayley({{0}}, 0), degree, {row});
}

GroupAction hull_closure_action(const FiniteGroup &g) {
  const HullSet hull =
      symmetrized_hull(GroupAction::left_translations(g));
  auto [hg, ha] = group_from_generators(hull.maps, g.order());
  return ha;
}

GroupAction right_translations(const FiniteGroup &g) {
  std::vector<std::vector<int>> map(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) map[a][x] = g.mul(x, g.inv(a));
  return GroupAction::create(g, g.order(), std::move(map));
}

// The fixed roster shared by criteria 1 and 2.
std::vector<std::pair<std::string, GroupAction>> rigidity_roster() {
  std::vector<std::pair<std::string, GroupAction>> roster;
  for (int n : {3, 4, 5, 6})
    roster.emplace_back("trivial on " + std::to_string(n), trivial_action(n));
  roster.emplace_back(
      "L(sym:3)", GroupAction::left_translations(zoo("sym:3").group));
  roster.emplace_back(
      "L(dihedral:4)", GroupAction::left_translations(zoo("dihedral:4").group));
  roster.emplace_back(
      "L(boolean:2)", GroupAction::left_translations(zoo("boolean:2").group));
  roster.emplace_back(
      "L(sym:4)", GroupAction::left_translations(zoo("sym:4").group));
  roster.emplace_back("hull(L(cyclic:4))",
                      hull_closure_action(zoo("cyclic:4").group));
  roster.emplace_back("hull(L(quaternion))",
                      hull_closure_action(zoo("quaternion").group));
  return roster;
}

const std::map<std::string, GroupCase> &expected_cases() {
  static const std::map<std::string, GroupCase> table = {
      {"trivial", GroupCase::kIsoGroup},
      {"cyclic:2", GroupCase::kIsoGroup},
      {"cyclic:3", GroupCase::kMiddle},
      {"cyclic:4", GroupCase::kMiddle},
      {"cyclic:5", GroupCase::kMiddle},
      {"cyclic:6", GroupCase::kMiddle},
      {"cyclic:7", GroupCase::kMiddle},
      {"cyclic:8", GroupCase::kMiddle},
      {"boolean:2", GroupCase::kIsoGroup},
      {"boolean:3", GroupCase::kIsoGroup},
      {"Z2xZ4", GroupCase::kMiddle},
      {"sym:3", GroupCase::kIsoGroup},
      {"dihedral:4", GroupCase::kIsoGroup},
      {"quaternion", GroupCase::kIsoSingular},
      {"alt:4", GroupCase::kIsoGroup},
      {"sym:4", GroupCase::kIsoGroup},
      {"dihedral:6", GroupCase::kIsoGroup},
      {"IS:1", GroupCase::kIsoSingular},
      {"IS:2", GroupCase::kIsoSingular},
      {"double(cyclic:4)", GroupCase::kIsoSingular},
      {"double(boolean:2)", GroupCase::kMiddle},
  };
  return table;
}

bool run_1(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  const auto roster = rigidity_roster();
  for (const auto &[name, action] : roster) {
    const RigidityReport rep = rigid_metric(
        action, std::nullopt, Rat(1, 10), SeparationScheme::kDirect, false);
    const HullSet hull = symmetrized_hull(action);
    if (isometry_perms(rep.metric) != hull.maps) {
      detail = name + ": oracle differs from the hull";
      return false;
    }
    if (rep.realized_group_order != static_cast<long>(hull.maps.size())) {
      detail = name + ": reported order is wrong";
      return false;
    }
  }
  const double elapsed = seconds_since(start);
  detail = std::to_string(roster.size()) + " actions, " +
           std::to_string(elapsed) + "s";
  return elapsed < 120.0;
}

bool run_2(std::string &detail) {
  std::mt19937_64 rng(20260826);
  for (const auto &[name, action] : rigidity_roster()) {
    const RationalMetric seed =
        invariantize(random_band_metric(action.degree(), rng), action);
    for (const Rat &eps : {Rat(1, 10), Rat(1, 100)}) {
      const RationalMetric rho =
          rigid_metric(action, seed, eps, SeparationScheme::kDirect, false)
              .metric;
      for (int x = 0; x < action.degree(); ++x)
        for (int y = x + 1; y < action.degree(); ++y)
          if (rho.at(x, y) < seed.at(x, y) ||
              rho.at(x, y) > (1 + eps) * seed.at(x, y)) {
            detail = name + ": corridor violated at (" + std::to_string(x) +
                     "," + std::to_string(y) + ")";
            return false;
          }
    }
  }
  return true;
}

bool run_3(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  const auto &expected = expected_cases();
  for (const ZooEntry &entry : curated_zoo()) {
    const Classification cls = classify(entry.group);
    if (cls.group_case != expected.at(entry.name)) {
      detail = entry.name + ": got case " + group_case_name(cls.group_case);
      return false;
    }
  }
  const double elapsed = seconds_since(start);
  detail = std::to_string(curated_zoo().size()) + " groups, " +
           std::to_string(elapsed) + "s";
  return elapsed < 60.0;
}

bool run_4(std::string &detail) {
  if (!find_isomorphism(zoo("IS:1").group, zoo("quaternion").group)) {
    detail = "IS:1 is not isomorphic to the quaternion group";
    return false;
  }
  for (int n = 1; n <= 4; ++n) {
    const FiniteGroup g = zoo("IS:" + std::to_string(n)).group;
    if (g.order() != (1 << (n + 2))) {
      detail = "IS:" + std::to_string(n) + " has order " +
               std::to_string(g.order());
      return false;
    }
  }
  for (int n : {1, 2})
    if (zoo("IS:" + std::to_string(n)).group.structure().exponent != 4) {
      detail = "IS:" + std::to_string(n) + " exponent is not 4";
      return false;
    }
  const CensusReport census = iso_singular_census(curated_zoo());
  if (!census.same_order_isomorphic) {
    detail = "same-order iso-singular members are not all isomorphic";
    return false;
  }
  return true;
}

bool run_5(std::string &detail) {
  std::mt19937_64 rng(5);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = 3 + static_cast<int>(rng() % 6);
    const RationalMetric rho = random_band_metric(degree, rng);
    const int a = static_cast<int>(rng() % degree);
    int b = static_cast<int>(rng() % degree);
    if (b == a) b = (b + 1) % degree;
    PairSet k_set;
    for (int x = 0; x < degree; ++x)
      for (int y = x + 1; y < degree; ++y) {
        if ((x == std::min(a, b) && y == std::max(a, b))) continue;
        if (rng() % 2) k_set.push_back({x, y});
      }
    const Rat eps(1 + static_cast<int>(rng() % 9), 10);
    bool ok = true;
    try {
      const BumpResult r = lip_bump(rho, a, b, k_set, eps, {});
      // (L1)
      if (lip_constant(r.u, rho) > 1 + eps) ok = false;
      Rat lo = r.u.values[0], hi = r.u.values[0];
      for (const Rat &v : r.u.values) {
        lo = rat_min(lo, v);
        hi = rat_max(hi, v);
      }
      if (hi - lo > r.alpha) ok = false;
      // (L2)
      if (rat_abs(r.u.values[a] - r.u.values[b]) != r.alpha) ok = false;
      if (!(r.alpha > rho.at(a, b))) ok = false;
      // (L3)
      for (const auto &[x, y] : k_set)
        if (rat_abs(r.u.values[x] - r.u.values[y]) >= r.alpha) ok = false;
    } catch (const std::exception &) {
      ok = false;
    }
    if (!ok) ++failures;
  }
  detail = std::to_string(failures) + " failures in 200 trials";
  return failures == 0;
}

bool run_6(std::string &detail) {
  for (const ZooEntry &entry : curated_zoo()) {
    const GroupAction action =
        entry.action ? *entry.action
                     : GroupAction::left_translations(entry.group);
    const RationalMetric d0 = RationalMetric::discrete(action.degree());
    const PairOrbitPartition part = pair_classes(action);
    std::vector<std::vector<Perm>> oracle_groups;
    for (SeparationScheme scheme :
         {SeparationScheme::kDirect, SeparationScheme::kPaper}) {
      const RationalMetric rho = separate_orbits(d0, action, Rat(1, 10), scheme);
      if (!is_invariant(rho, action)) {
        detail = entry.name + ": output is not invariant";
        return false;
      }
      std::set<Rat> values;
      for (const auto &cls : part.classes)
        values.insert(rho.at(cls[0].first, cls[0].second));
      if (values.size() != part.classes.size()) {
        detail = entry.name + ": class values are not pairwise distinct";
        return false;
      }
      oracle_groups.push_back(isometry_perms(rho));
    }
    if (oracle_groups[0] != oracle_groups[1]) {
      detail = entry.name + ": schemes disagree on the isometry group";
      return false;
    }
  }
  return true;
}

bool run_7(std::string &detail) {
  const auto &expected = expected_cases();
  const std::set<std::string> must_break = {"sym:3", "dihedral:4", "sym:4",
                                            "alt:4", "dihedral:6"};
  for (const ZooEntry &entry : curated_zoo()) {
    const bool abelian = entry.group.structure().abelian;
    const bool want =
        abelian || expected.at(entry.name) == GroupCase::kIsoSingular;
    if (biinvariant_only(entry.group) != want) {
      detail = entry.name + ": bi-invariance verdict is wrong";
      return false;
    }
  }
  // Left-invariant but not right-invariant metrics for the failing cases.
  for (const std::string &name : must_break) {
    const FiniteGroup g = zoo(name).group;
    const StructureReport st = g.structure();
    int a = -1;
    for (int x = 0; x < g.order() && a < 0; ++x)
      if (!std::binary_search(st.center.begin(), st.center.end(), x)) a = x;
    std::vector<int> right(g.order());
    for (int x = 0; x < g.order(); ++x) right[x] = g.mul(x, g.inv(a));
    const Perm r_a(right);
    // Seed with a metric invariant under both sides so the right translation
    // starts out as an isometry and the final oracle stays tractable.
    const GroupAction left_action = GroupAction::left_translations(g);
    std::vector<Perm> gens = left_action.perms();
    gens.push_back(r_a);
    auto [big, big_action] = group_from_generators(gens, g.order());
    const RationalMetric seed = separate_orbits(
        RationalMetric::discrete(g.order()), big_action, Rat(1, 10),
        SeparationScheme::kDirect);
    const RationalMetric rho = break_symmetry(seed, g, r_a, Rat(1, 10));
    if (!is_invariant(rho, left_action)) {
      detail = name + ": broken metric lost left-invariance";
      return false;
    }
    const std::vector<Perm> iso = isometry_perms(rho);
    if (std::binary_search(iso.begin(), iso.end(), r_a)) {
      detail = name + ": the right translation is still an isometry";
      return false;
    }
  }
  // Quaternion: random symmetric length functions give bi-invariant metrics.
  const FiniteGroup q8 = zoo("quaternion").group;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> len(q8.order(), Rat(0));
    for (int x = 1; x < q8.order(); ++x) {
      if (len[x] != 0) continue;
      const Rat v(1000 + static_cast<int>(rng() % 1000), 1000);
      len[x] = v;
      len[q8.inv(x)] = v;
    }
    std::vector<std::vector<Rat>> matrix(q8.order(),
                                         std::vector<Rat>(q8.order(), Rat(0)));
    for (int x = 0; x < q8.order(); ++x)
      for (int y = 0; y < q8.order(); ++y)
        if (x != y) matrix[x][y] = len[q8.mul(q8.inv(x), y)];
    const RationalMetric d = RationalMetric::validate(matrix);
    for (int gi = 0; gi < q8.order(); ++gi)
      for (int x = 0; x < q8.order(); ++x)
        for (int y = 0; y < q8.order(); ++y)
          if (d.at(q8.mul(x, gi), q8.mul(y, gi)) != d.at(x, y)) {
            detail = "a quaternion length metric is not right-invariant";
            return false;
          }
  }
  return true;
}

bool run_8(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteGroup z2 = zoo("cyclic:2").group;
  const FiniteGroup q8 = zoo("quaternion").group;

  auto check_product = [&](const FiniteGroup &g, int m,
                           const std::string &name) {
    auto [rep, action] = product_rigid(g, m, Rat(1, 10), true);
    if (!rep.verified || rep.realized_group_order != g.order()) {
      detail = name + ": wrong order or unverified";
      return false;
    }
    for (int a = 0; a < g.order(); ++a) {
      if (a == g.identity()) continue;
      for (int x = 0; x < action.degree(); ++x)
        if (action.apply(a, x) == x) {
          detail = name + ": action is not free";
          return false;
        }
    }
    return true;
  };
  if (!check_product(z2, 3, "product_rigid(Z2,3)")) return false;
  if (!check_product(q8, 2, "product_rigid(Q8,2)")) return false;

  const ZooEntry s3 = zoo("sym:3");
  auto [rep, whole] = disjoint_union_rigid(*s3.action, Rat(1, 10), true);
  if (!rep.verified || rep.realized_group_order != 6) {
    detail = "union of S3: wrong order or unverified";
    return false;
  }
  // Free on the adjoined translation block.
  for (int a = 0; a < s3.group.order(); ++a) {
    if (a == s3.group.identity()) continue;
    for (int x = s3.action->degree(); x < whole.degree(); ++x)
      if (whole.apply(a, x) == x) {
        detail = "union of S3: translation block is not free";
        return false;
      }
  }
  const double elapsed = seconds_since(start);
  detail = std::to_string(elapsed) + "s";
  return elapsed < 60.0;
}

bool run_9(std::string &detail) {
  try {
    rigid_metric(trivial_action(2), std::nullopt, Rat(1, 10),
                 SeparationScheme::kDirect, true);
    detail = "two points with a trivial group were not refused";
    return false;
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::ForbiddenCardinality) {
      detail = std::string("wrong refusal kind: ") + e.what();
      return false;
    }
  }
  const RationalMetric pair =
      RationalMetric::validate({{Rat(0), Rat(7, 3)}, {Rat(7, 3), Rat(0)}});
  if (isometry_perms(pair).size() != 2) {
    detail = "two-point oracle did not report order 2";
    return false;
  }
  return true;
}

bool run_10(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  const DensityReport rep = density_trial(5, 500, 0);
  const double elapsed = seconds_since(start);
  detail = "fraction=" + format_rational(rep.fraction) + ", " +
           std::to_string(elapsed) + "s";
  return rep.fraction >= Rat(95, 100) && rep.corridor_all_trivial &&
         elapsed < 30.0;
}

bool run_11(std::string &detail) {
  const FiniteGroup s3 = zoo("sym:3").group;
  const GroupAction left = GroupAction::left_translations(s3);
  const GroupAction right = right_translations(s3);
  if (!is_hull_closed(right)) {
    detail = "right translations are not hull-closed";
    return false;
  }
  const RationalMetric d1 =
      rigid_metric(left, std::nullopt, Rat(1, 10), SeparationScheme::kDirect,
                   false)
          .metric;
  const RationalMetric d2 =
      rigid_metric(right, std::nullopt, Rat(1, 10), SeparationScheme::kDirect,
                   false)
          .metric;
  const std::vector<Perm> iso1 = isometry_perms(d1);
  const std::vector<Perm> iso2 = isometry_perms(d2);
  std::vector<Perm> left_sorted = left.perms();
  std::sort(left_sorted.begin(), left_sorted.end());
  std::vector<Perm> right_sorted = right.perms();
  std::sort(right_sorted.begin(), right_sorted.end());
  if (iso1 != left_sorted || iso2 != right_sorted) {
    detail = "the rigid metrics do not realize the two translation groups";
    return false;
  }
  std::vector<Perm> both;
  std::set_intersection(iso1.begin(), iso1.end(), iso2.begin(), iso2.end(),
                        std::back_inserter(both));
  if (both.size() != 1 || !both[0].is_identity()) {
    detail = "intersection is not the center (trivial for S3)";
    return false;
  }
  auto [ig, ia] = group_from_generators(both, 6);
  if (!is_hull_closed(ia)) {
    detail = "intersection is not hull-closed";
    return false;
  }
  const RigidityReport rep = rigid_metric(ia, std::nullopt, Rat(1, 10),
                                          SeparationScheme::kDirect, true);
  if (!rep.verified || rep.realized_group_order != 1) {
    detail = "intersection group was not realized oracle-exactly";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "rigidity round-trip equals the hull", run_1);
  criterion(2, "corridor bounds with invariant seeds", run_2);
  criterion(3, "trichotomy on the curated zoo", run_3);
  criterion(4, "iso-singular family identities", run_4);
  criterion(5, "bump-function property suite", run_5);
  criterion(6, "orbit separation on every zoo action", run_6);
  criterion(7, "bi-invariance and symmetry breaking", run_7);
  criterion(8, "free realizations: products and unions", run_8);
  criterion(9, "two-point exceptional case", run_9);
  criterion(10, "trivial-isometry density proxy", run_10);
  criterion(11, "intersection of rigid isometry groups", run_11);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
