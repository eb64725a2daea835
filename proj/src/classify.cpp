#include "isoforge/classify.hpp"

#include <algorithm>
#include <string>

#include "isoforge/error.hpp"

namespace isoforge {

const char *group_case_name(GroupCase c) {
  switch (c) {
    case GroupCase::kIsoGroup: return "A";
    case GroupCase::kMiddle: return "B";
    case GroupCase::kIsoSingular: return "C";
  }
  return "?";
}

namespace {

// Pairwise predicate: every two elements either share a square or commute.
// For non-abelian groups this characterises the iso-singular case.
bool squares_or_commute(const FiniteGroup &g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, x) != g.mul(y, y) && g.mul(x, y) != g.mul(y, x))
        return false;
  return true;
}

// All double witnesses, in canonical subgroup order.
std::vector<DoubleStructure> all_doubles(const FiniteGroup &g) {
  std::vector<DoubleStructure> out;
  for (const std::vector<int> &k : g.index2_subgroups()) {
    bool abelian = true;
    for (std::size_t i = 0; i < k.size() && abelian; ++i)
      for (std::size_t j = i + 1; j < k.size(); ++j)
        if (g.mul(k[i], k[j]) != g.mul(k[j], k[i])) {
          abelian = false;
          break;
        }
    if (!abelian) continue;
    std::vector<char> inside(g.order(), 0);
    for (int x : k) inside[x] = 1;
    int q = -1;
    bool constant = true;
    for (int x = 0; x < g.order() && constant; ++x) {
      if (inside[x]) continue;
      const int sq = g.mul(x, x);
      if (q < 0)
        q = sq;
      else if (sq != q)
        constant = false;
    }
    if (!constant || q < 0 || q == g.identity() || g.mul(q, q) != g.identity())
      continue;
    DoubleStructure ds;
    ds.whole = g;
    ds.subgroup_h = k;
    ds.p_tilde = q;
    out.push_back(std::move(ds));
  }
  return out;
}

// {x^2 : x in the subgroup} contained in {e, p_tilde}?
bool inner_squares_small(const FiniteGroup &g, const DoubleStructure &ds) {
  for (int x : ds.subgroup_h) {
    const int sq = g.mul(x, x);
    if (sq != g.identity() && sq != ds.p_tilde) return false;
  }
  return true;
}

}  // namespace

Classification classify(const FiniteGroup &g, std::int64_t budget) {
  Classification cls;
  cls.hull_e = hull_at_identity(g, budget);

  const StructureReport st = g.structure();
  GroupCase structural;
  if (st.boolean) {
    structural = GroupCase::kIsoGroup;
  } else if (st.abelian) {
    structural = GroupCase::kMiddle;
    auto doubles = all_doubles(g);
    if (!doubles.empty()) cls.structural_witness = doubles.front();
  } else {
    std::vector<DoubleStructure> doubles = all_doubles(g);
    if (doubles.empty()) {
      structural = GroupCase::kIsoGroup;
    } else {
      auto deep = std::find_if(doubles.begin(), doubles.end(),
                               [&](const DoubleStructure &ds) {
                                 return inner_squares_small(g, ds);
                               });
      if (deep == doubles.end()) {
        structural = GroupCase::kMiddle;
        cls.structural_witness = doubles.front();
      } else {
        structural = GroupCase::kIsoSingular;
        cls.structural_witness = *deep;
        auto [inner_group, back] = g.subgroup_as_group(deep->subgroup_h);
        cls.inner_double = recognize_double(inner_group);
        if (!cls.inner_double)
          throw Error(ErrorKind::RouteMismatch,
                      "iso-singular subgroup carries no double structure");
      }
      // Cross-check the witness dichotomy against the pairwise predicate.
      if ((structural == GroupCase::kIsoSingular) != squares_or_commute(g))
        throw Error(ErrorKind::RouteMismatch,
                    "double-witness route and pairwise predicate disagree");
    }
  }

  GroupCase hull_route;
  switch (cls.hull_e.maps.size()) {
    case 1: hull_route = GroupCase::kIsoGroup; break;
    case 2: hull_route = GroupCase::kMiddle; break;
    case 8: hull_route = GroupCase::kIsoSingular; break;
    default:
      throw Error(ErrorKind::RouteMismatch,
                  "hull at identity has size " +
                      std::to_string(cls.hull_e.maps.size()));
  }
  if (structural != hull_route)
    throw Error(ErrorKind::RouteMismatch,
                std::string("structural route says ") +
                    group_case_name(structural) + ", hull route says " +
                    group_case_name(hull_route));
  cls.group_case = structural;

  std::vector<int> kappa_im(g.order());
  for (int x = 0; x < g.order(); ++x) kappa_im[x] = g.inv(x);
  const Perm kappa(std::move(kappa_im));
  cls.kappa_in_hull = std::binary_search(cls.hull_e.maps.begin(),
                                         cls.hull_e.maps.end(), kappa);
  return cls;
}

AdmitsReport admits_left_rigid(const FiniteGroup &g, std::int64_t budget) {
  const Classification cls = classify(g, budget);
  const StructureReport st = g.structure();
  AdmitsReport report;
  report.admits = cls.group_case == GroupCase::kIsoGroup;
  report.boolean_condition = st.boolean;
  report.no_double_condition = !st.abelian && all_doubles(g).empty();
  bool center_boolean = true;
  for (int z : st.center)
    if (g.mul(z, z) != g.identity()) {
      center_boolean = false;
      break;
    }
  report.center_criterion =
      !st.abelian && (st.center.size() == 1 || !center_boolean);
  return report;
}

bool biinvariant_only(const FiniteGroup &g, std::int64_t budget) {
  const StructureReport st = g.structure();
  const bool via_classify =
      st.abelian || classify(g, budget).group_case == GroupCase::kIsoSingular;
  const bool via_predicate = squares_or_commute(g);
  if (via_classify != via_predicate)
    throw Error(ErrorKind::RouteMismatch,
                "classification route and pairwise predicate disagree on "
                "bi-invariance");
  return via_classify;
}

CensusReport iso_singular_census(const std::vector<ZooEntry> &groups,
                                 std::int64_t budget) {
  CensusReport report;
  std::vector<const FiniteGroup *> members;
  for (const ZooEntry &entry : groups) {
    const Classification cls = classify(entry.group, budget);
    if (cls.group_case != GroupCase::kIsoSingular) continue;
    const StructureReport st = entry.group.structure();
    report.iso_singular.push_back(
        CensusEntry{entry.name, entry.group.order(), st.exponent});
    members.push_back(&entry.group);
  }

  report.all_exponent_four = true;
  for (const CensusEntry &e : report.iso_singular)
    if (e.exponent != 4) report.all_exponent_four = false;

  report.same_order_isomorphic = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i]->order() == members[j]->order() &&
          !find_isomorphism(*members[i], *members[j]))
        report.same_order_isomorphic = false;

  report.is_family_orders_match = true;
  for (const CensusEntry &e : report.iso_singular)
    if (e.name.rfind("IS:", 0) == 0) {
      const int n = std::stoi(e.name.substr(3));
      if (e.order != (1L << (n + 2))) report.is_family_orders_match = false;
    }
  return report;
}

}  // namespace isoforge
