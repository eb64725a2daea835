#include "isoforge/hull.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "isoforge/error.hpp"

namespace isoforge {

std::int64_t search_budget_from_env(std::int64_t fallback) {
  const char *raw = std::getenv("ISOFORGE_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char *end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= 0)
    throw Error(ErrorKind::Usage,
                "ISOFORGE_BUDGET must be a positive integer, got '" +
                    std::string(raw) + "'");
  return value;
}

PairOrbitPartition pair_classes(const GroupAction &action) {
  const int n = action.degree();
  PairOrbitPartition part;
  part.degree = n;
  part.class_of.assign(static_cast<std::size_t>(n) * n, -1);

  auto id_of = [n](int x, int y) { return x * n + y; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || part.class_of[id_of(x, y)] >= 0) continue;
      // Flood the orbit of (x,y) under the diagonal action and the swap.
      const int cls = static_cast<int>(part.classes.size());
      std::vector<std::pair<int, int>> members;
      std::vector<std::pair<int, int>> frontier{{x, y}};
      part.class_of[id_of(x, y)] = cls;
      while (!frontier.empty()) {
        auto [a, b] = frontier.back();
        frontier.pop_back();
        members.emplace_back(a, b);
        auto visit = [&](int c, int d) {
          if (part.class_of[id_of(c, d)] < 0) {
            part.class_of[id_of(c, d)] = cls;
            frontier.emplace_back(c, d);
          }
        };
        visit(b, a);
        for (int g = 0; g < action.group().order(); ++g)
          visit(action.apply(g, a), action.apply(g, b));
      }
      std::sort(members.begin(), members.end());
      part.classes.push_back(std::move(members));
    }
  return part;
}

namespace {

struct HullSearch {
  const GroupAction &action;
  const PairOrbitPartition &part;
  std::int64_t budget;
  std::int64_t nodes = 0;
  std::vector<int> image;
  std::vector<char> used;
  std::vector<std::vector<int>> orbit_of;  // candidate images per point
  std::vector<Perm> found;

  void run(int x) {
    if (++nodes > budget)
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "hull search exceeded " + std::to_string(budget) + " nodes");
    const int n = action.degree();
    if (x == n) {
      found.emplace_back(image);
      return;
    }
    for (int y : orbit_of[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z)
        ok = part.at(y, image[z]) == part.at(x, z);
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      run(x + 1);
      used[y] = 0;
    }
  }
};

}  // namespace

HullSet symmetrized_hull(const GroupAction &action, std::int64_t budget) {
  const int n = action.degree();
  PairOrbitPartition part = pair_classes(action);
  HullSearch search{action, part, budget};
  search.image.assign(n, 0);
  search.used.assign(n, 0);
  search.orbit_of.resize(n);
  for (int x = 0; x < n; ++x) search.orbit_of[x] = action.orbit(x);
  search.run(0);

  HullSet hull;
  hull.maps = std::move(search.found);
  std::sort(hull.maps.begin(), hull.maps.end());
  std::vector<Perm> base = action.perms();
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  hull.closed = hull.maps == base;
  return hull;
}

bool pairwise_hull_member(const GroupAction &action, const Perm &u) {
  const int n = action.degree();
  if (u.degree() != n)
    throw Error(ErrorKind::Precondition, "degree mismatch in hull test");
  PairOrbitPartition part = pair_classes(action);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (part.at(u[x], u[y]) != part.at(x, y)) return false;
  return true;
}

namespace {

struct OrientationSearch {
  const PairOrbitPartition &part;
  std::int64_t budget;
  std::int64_t nodes = 0;
  // pairs[i] = {x, x^-1}; fixed points (involutions, identity) are preset.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> image;
  std::vector<int> assigned;  // points whose image is decided so far
  std::vector<Perm> found;

  bool compatible(int x) const {
    for (int z : assigned)
      if (z != x && part.at(image[x], image[z]) != part.at(x, z)) return false;
    return true;
  }

  void run(std::size_t k) {
    if (++nodes > budget)
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "orientation search exceeded " + std::to_string(budget) +
                      " nodes");
    if (k == pairs.size()) {
      found.emplace_back(image);
      return;
    }
    auto [x, xi] = pairs[k];
    for (int flip = 0; flip < 2; ++flip) {
      image[x] = flip ? xi : x;
      image[xi] = flip ? x : xi;
      assigned.push_back(x);
      if (compatible(x)) {
        assigned.push_back(xi);
        if (compatible(xi)) run(k + 1);
        assigned.pop_back();
      }
      assigned.pop_back();
    }
  }
};

}  // namespace

HullSet hull_at_identity(const FiniteGroup &g, std::int64_t budget) {
  const GroupAction left = GroupAction::left_translations(g);
  PairOrbitPartition part = pair_classes(left);

  OrientationSearch search{part, budget};
  search.image.resize(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (g.inv(x) == x) {
      search.image[x] = x;
      search.assigned.push_back(x);
    } else if (x < g.inv(x)) {
      search.pairs.emplace_back(x, g.inv(x));
    }
  }
  // Fixed points are mutually compatible automatically (identity map), but
  // check anyway so broken tables fail loudly.
  for (int z : search.assigned)
    if (!search.compatible(z))
      throw Error(ErrorKind::Precondition,
                  "identity is not pair-compatible with itself");
  search.run(0);

  HullSet hull;
  hull.maps = std::move(search.found);
  std::sort(hull.maps.begin(), hull.maps.end());
  hull.closed = hull.maps.size() == 1;
  return hull;
}

bool is_hull_closed(const GroupAction &action, std::int64_t budget) {
  return symmetrized_hull(action, budget).closed;
}

}  // namespace isoforge
