#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "isoforge/doubling.hpp"
#include "isoforge/error.hpp"

using namespace isoforge;

namespace {

FiniteGroup z(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_cayley(t, 0);
}

// Every involution of an abelian group, paired with the group.
std::vector<BasePair> base_pairs_of(const FiniteGroup &g) {
  std::vector<BasePair> out;
  for (int p = 0; p < g.order(); ++p)
    if (p != g.identity() && g.mul(p, p) == g.identity())
      out.push_back(BasePair{g, p});
  return out;
}

std::vector<BasePair> sample_base_pairs() {
  std::vector<BasePair> out;
  for (const FiniteGroup &g :
       {z(2), z(4), z(6), zoo("boolean:2").group, zoo("boolean:3").group}) {
    auto more = base_pairs_of(g);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

}  // namespace

TEST_CASE("doubling small bases lands on the expected groups") {
  auto [c4, ds1] = double_group({z(2), 1});
  CHECK(c4.order() == 4);
  CHECK(find_isomorphism(c4, z(4)).has_value());

  auto [q8, ds2] = double_group({z(4), 2});
  CHECK(q8.order() == 8);
  CHECK(find_isomorphism(q8, zoo("quaternion").group).has_value());

  auto [k8, ds3] = double_group({zoo("boolean:2").group, 1});
  CHECK(k8.structure().abelian);
  CHECK(!k8.structure().boolean);
}

TEST_CASE("invalid base pairs are rejected") {
  auto kind = [](auto f) {
    try {
      f();
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::Precondition;
  };
  CHECK(kind([] { double_group({z(4), 0}); }) == ErrorKind::InvalidBasePair);
  CHECK(kind([] { double_group({z(4), 1}); }) == ErrorKind::InvalidBasePair);
  CHECK(kind([] { double_group({zoo("sym:3").group, 3}); }) ==
        ErrorKind::InvalidBasePair);
}

TEST_CASE("structure claims hold for every sampled base pair") {
  for (const BasePair &bp : sample_base_pairs()) {
    CAPTURE(bp.group.order());
    CAPTURE(bp.p);
    auto [g, ds] = double_group(bp);
    const int n = bp.group.order();
    CHECK(g.order() == 2 * n);
    CHECK(g.identity() == bp.group.identity());

    // The base block is a normal subgroup of index 2.
    std::set<int> inside(ds.subgroup_h.begin(), ds.subgroup_h.end());
    CHECK(static_cast<int>(inside.size()) == n);
    for (int a = 0; a < g.order(); ++a)
      for (int h : ds.subgroup_h) CHECK(inside.count(g.conj(a, h)) == 1);

    // Outside elements square to p~.
    for (int a = 0; a < g.order(); ++a)
      if (!inside.count(a)) CHECK(g.mul(a, a) == ds.p_tilde);
    CHECK(ds.p_tilde == bp.p);

    // Conjugation by an outside element inverts the base block.
    for (int a = 0; a < g.order(); ++a)
      if (!inside.count(a))
        for (int h : ds.subgroup_h) CHECK(g.conj(a, h) == g.inv(h));

    CHECK(g.structure().abelian == bp.group.structure().boolean);
    CHECK(!g.structure().boolean);

    // Round trip: a double structure is recognizable.
    CHECK(recognize_double(g).has_value());
  }
}

TEST_CASE("center of a non-Boolean double is the Boolean part of the base") {
  for (const BasePair &bp : base_pairs_of(z(4))) {
    auto [g, ds] = double_group(bp);
    std::vector<int> expected;
    for (int h : ds.subgroup_h)
      if (g.mul(h, h) == g.identity()) expected.push_back(h);
    CHECK(g.structure().center == expected);
  }
}

TEST_CASE("recognition: positives and negatives") {
  const auto q8 = recognize_double(zoo("quaternion").group);
  REQUIRE(q8.has_value());
  auto [k, back] = zoo("quaternion").group.subgroup_as_group(q8->subgroup_h);
  CHECK(k.order() == 4);
  CHECK(!k.structure().boolean);  // cyclic of order 4
  CHECK(q8->p_tilde != zoo("quaternion").group.identity());

  CHECK(!recognize_double(zoo("dihedral:4").group).has_value());
  CHECK(!recognize_double(z(3)).has_value());
  CHECK(!recognize_double(zoo("boolean:2").group).has_value());
}

TEST_CASE("recognized structure reproduces the group") {
  for (const char *name : {"quaternion", "cyclic:4", "IS:2"}) {
    CAPTURE(name);
    const FiniteGroup g = zoo(name).group;
    const auto ds = recognize_double(g);
    REQUIRE(ds.has_value());
    auto [k, back] = g.subgroup_as_group(ds->subgroup_h);
    const int p_inner =
        static_cast<int>(std::find(back.begin(), back.end(), ds->p_tilde) -
                         back.begin());
    auto [rebuilt, ds2] = double_group({k, p_inner});
    CHECK(find_isomorphism(g, rebuilt).has_value());
  }
}

TEST_CASE("phi automorphism") {
  auto [g, ds] = double_group({z(2), 1});
  const Perm phi = phi_automorphism(ds);
  CHECK((phi * phi).is_identity());
  CHECK(!phi.is_identity());
  // It fixes the base block and swaps the two order-4 elements.
  for (int h : ds.subgroup_h) CHECK(phi[h] == h);
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 4) CHECK(phi[x] != x);

  // The split law: conjugating a left translation by phi is the left
  // translation at the phi image.
  const GroupAction left = GroupAction::left_translations(g);
  for (int a = 0; a < g.order(); ++a)
    CHECK(phi * left.perm(a) * phi.inverse() == left.perm(phi[a]));
}

TEST_CASE("base pair isomorphism") {
  const FiniteGroup b2 = zoo("boolean:2").group;
  CHECK(base_pair_isomorphic({b2, 1}, {b2, 2}));
  CHECK(base_pair_isomorphic({b2, 1}, {b2, 3}));
  CHECK(!base_pair_isomorphic({z(4), 2}, {b2, 1}));

  // Isomorphic base pairs double to isomorphic groups, and conversely on the
  // sampled family.
  const auto pairs = sample_base_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].group.order() != pairs[j].group.order()) continue;
      auto [gi, di] = double_group(pairs[i]);
      auto [gj, dj] = double_group(pairs[j]);
      CHECK(base_pair_isomorphic(pairs[i], pairs[j]) ==
            find_isomorphism(gi, gj).has_value());
    }
}

TEST_CASE("zoo grammar") {
  CHECK(zoo("trivial").group.order() == 1);
  CHECK(zoo("cyclic:7").group.order() == 7);
  CHECK(zoo("boolean:3").group.order() == 8);
  CHECK(zoo("boolean:3").group.structure().boolean);
  CHECK(zoo("dihedral:6").group.order() == 12);
  CHECK(zoo("sym:4").group.order() == 24);
  CHECK(zoo("alt:4").group.order() == 12);
  CHECK(zoo("alt:5").group.order() == 60);
  CHECK(zoo("quaternion").group.order() == 8);

  CHECK(zoo("IS:1").group.order() == 8);
  CHECK(find_isomorphism(zoo("IS:1").group, zoo("quaternion").group)
            .has_value());
  const FiniteGroup is2 = zoo("IS:2").group;
  CHECK(is2.order() == 16);
  CHECK(!is2.structure().abelian);
  CHECK(is2.structure().exponent == 4);

  CHECK(zoo("sym:3").action.has_value());
  CHECK(zoo("sym:3").action->degree() == 3);

  for (const char *bad : {"nonsense", "cyclic:x", "cyclic:", "sym:0", "IS:0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(zoo(bad), Error);
  }
}

TEST_CASE("curated zoo is the fixed census universe") {
  const auto groups = curated_zoo();
  CHECK(groups.size() == 21);
  std::set<std::string> names;
  for (const ZooEntry &e : groups) names.insert(e.name);
  CHECK(names.size() == groups.size());
  CHECK(names.count("quaternion") == 1);
  CHECK(names.count("IS:2") == 1);
  CHECK(names.count("Z2xZ4") == 1);
  CHECK(names.count("double(cyclic:4)") == 1);
}
