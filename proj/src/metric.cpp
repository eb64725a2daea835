#include "isoforge/metric.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

std::string pair_name(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

RationalMetric RationalMetric::validate(
    const std::vector<std::vector<Rat>> &matrix) {
  const int n = static_cast<int>(matrix.size());
  for (int x = 0; x < n; ++x)
    if (static_cast<int>(matrix[x].size()) != n)
      throw Error(ErrorKind::Precondition,
                  "row " + std::to_string(x) + " has " +
                      std::to_string(matrix[x].size()) + " entries, expected " +
                      std::to_string(n));
  for (int x = 0; x < n; ++x)
    if (matrix[x][x] != 0)
      throw Error(ErrorKind::NonzeroDiagonal,
                  "d" + pair_name(x, x) + " = " + format_rational(matrix[x][x]));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (matrix[x][y] != matrix[y][x])
        throw Error(ErrorKind::AsymmetricEntry,
                    "d" + pair_name(x, y) + " = " +
                        format_rational(matrix[x][y]) + " but d" +
                        pair_name(y, x) + " = " + format_rational(matrix[y][x]));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (matrix[x][y] <= 0)
        throw Error(ErrorKind::NegativeOrZeroOffDiagonal,
                    "d" + pair_name(x, y) + " = " +
                        format_rational(matrix[x][y]));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (matrix[x][z] > matrix[x][y] + matrix[y][z])
          throw Error(ErrorKind::TriangleViolation,
                      "d" + pair_name(x, z) + " > d" + pair_name(x, y) +
                          " + d" + pair_name(y, z) + ": " +
                          format_rational(matrix[x][z]) + " > " +
                          format_rational(matrix[x][y]) + " + " +
                          format_rational(matrix[y][z]));
  RationalMetric d;
  d.degree_ = n;
  d.dist_.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) d.dist_.push_back(matrix[x][y]);
  return d;
}

RationalMetric RationalMetric::from_entries(int degree, std::vector<Rat> dist) {
  std::vector<std::vector<Rat>> matrix(degree, std::vector<Rat>(degree));
  for (int x = 0; x < degree; ++x)
    for (int y = 0; y < degree; ++y) matrix[x][y] = dist[x * degree + y];
  return validate(matrix);
}

RationalMetric RationalMetric::discrete(int degree) {
  std::vector<Rat> dist(static_cast<std::size_t>(degree) * degree, Rat(1));
  for (int x = 0; x < degree; ++x) dist[x * degree + x] = 0;
  return from_entries(degree, std::move(dist));
}

Rat RationalMetric::min_positive_distance() const {
  Rat best(0);
  bool seen = false;
  for (int x = 0; x < degree_; ++x)
    for (int y = x + 1; y < degree_; ++y)
      if (!seen || at(x, y) < best) {
        best = at(x, y);
        seen = true;
      }
  if (!seen)
    throw Error(ErrorKind::Precondition,
                "no off-diagonal pair on " + std::to_string(degree_) +
                    " points");
  return best;
}

Rat lip_constant(const MetricFunction &f, const RationalMetric &d) {
  Rat best(0);
  for (int x = 0; x < d.degree(); ++x)
    for (int y = x + 1; y < d.degree(); ++y)
      best = rat_max(best, rat_abs(f.values[x] - f.values[y]) / d.at(x, y));
  return best;
}

Rat lip_constant(const Perm &f, const RationalMetric &d) {
  Rat best(0);
  for (int x = 0; x < d.degree(); ++x)
    for (int y = x + 1; y < d.degree(); ++y)
      best = rat_max(best, d.at(f[x], f[y]) / d.at(x, y));
  return best;
}

RationalMetric invariantize(const RationalMetric &rho,
                            const GroupAction &action) {
  const int n = rho.degree();
  if (action.degree() != n)
    throw Error(ErrorKind::Precondition, "degree mismatch in invariantize");
  std::vector<Rat> dist(static_cast<std::size_t>(n) * n, Rat(0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      Rat best = rho.at(x, y);
      for (int g = 0; g < action.group().order(); ++g)
        best = rat_max(best, rho.at(action.apply(g, x), action.apply(g, y)));
      dist[x * n + y] = best;
    }
  return RationalMetric::from_entries(n, std::move(dist));
}

bool is_invariant(const RationalMetric &rho, const GroupAction &action) {
  for (int g = 0; g < action.group().order(); ++g)
    for (int x = 0; x < rho.degree(); ++x)
      for (int y = x + 1; y < rho.degree(); ++y)
        if (rho.at(action.apply(g, x), action.apply(g, y)) != rho.at(x, y))
          return false;
  return true;
}

Rat lambda_distance(const RationalMetric &rho1, const RationalMetric &rho2,
                    const RationalMetric &d) {
  Rat best(0);
  for (int x = 0; x < d.degree(); ++x)
    for (int y = x + 1; y < d.degree(); ++y)
      best = rat_max(best, rat_abs(rho1.at(x, y) - rho2.at(x, y)) / d.at(x, y));
  return best;
}

namespace {

struct IsometrySearch {
  const RationalMetric &d;
  std::int64_t budget;
  std::int64_t nodes = 0;
  std::vector<int> color;  // distance-profile class per point
  std::vector<int> image;
  std::vector<char> used;
  std::vector<Perm> found;

  void run(int x) {
    if (++nodes > budget)
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "isometry search exceeded " + std::to_string(budget) +
                      " nodes");
    const int n = d.degree();
    if (x == n) {
      found.emplace_back(image);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || color[y] != color[x]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) ok = d.at(y, image[z]) == d.at(x, z);
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      run(x + 1);
      used[y] = 0;
    }
  }
};

}  // namespace

std::vector<Perm> isometry_perms(const RationalMetric &d, std::int64_t budget) {
  const int n = d.degree();
  // Refine by distance-profile multisets: isometries preserve them, so
  // candidate images are restricted to the same class.
  std::map<std::vector<Rat>, int> profile_class;
  std::vector<int> color(n);
  for (int x = 0; x < n; ++x) {
    std::vector<Rat> profile;
    profile.reserve(n);
    for (int y = 0; y < n; ++y) profile.push_back(d.at(x, y));
    std::sort(profile.begin(), profile.end());
    auto [it, inserted] = profile_class.try_emplace(
        std::move(profile), static_cast<int>(profile_class.size()));
    color[x] = it->second;
  }

  IsometrySearch search{d, budget};
  search.color = std::move(color);
  search.image.assign(n, 0);
  search.used.assign(n, 0);
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

std::pair<FiniteGroup, GroupAction> isometry_group(const RationalMetric &d,
                                                   std::int64_t budget) {
  std::vector<Perm> perms = isometry_perms(d, budget);
  // The identity is lexicographically least, so it sits at index 0.
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index.emplace(perms[i], static_cast<int>(i));
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::vector<int>> map(order, std::vector<int>(d.degree()));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      auto it = index.find(perms[i] * perms[j]);
      if (it == index.end())
        throw Error(ErrorKind::VerificationFailed,
                    "isometries are not closed under composition");
      table[i][j] = it->second;
    }
    for (int x = 0; x < d.degree(); ++x) map[i][x] = perms[i][x];
  }
  FiniteGroup g = FiniteGroup::from_cayley(table, 0);
  GroupAction action = GroupAction::create(g, d.degree(), std::move(map));
  return {std::move(g), std::move(action)};
}

}  // namespace isoforge
