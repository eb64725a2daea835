#include "isoforge/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>> &table,
                                     int identity) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::Precondition, "empty table");
  if (identity < 0 || identity >= n)
    throw Error(ErrorKind::Precondition,
                "identity index " + std::to_string(identity) + " out of range");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::Precondition,
                  "row " + std::to_string(a) + " is not of length " +
                      std::to_string(n));
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw Error(ErrorKind::Precondition,
                    "entry out of range at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
  }

  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[table[a][b]]++)
        throw Error(ErrorKind::NotLatinSquare,
                    "row " + std::to_string(a) + " repeats element " +
                        std::to_string(table[a][b]));
      if (col[table[b][a]]++)
        throw Error(ErrorKind::NotLatinSquare,
                    "column " + std::to_string(a) + " repeats element " +
                        std::to_string(table[b][a]));
    }
  }

  for (int a = 0; a < n; ++a) {
    if (table[identity][a] != a || table[a][identity] != a)
      throw Error(ErrorKind::NoIdentity,
                  "element " + std::to_string(a) +
                      " is not fixed by the designated identity");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAssociative,
                      "associativity fails at " + triple(a, b, c));

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      throw Error(ErrorKind::NoInverse,
                  "element " + std::to_string(a) + " has no two-sided inverse");
  }

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a * n + b] = table[a][b];
  g.inv_ = std::move(inv);
  return g;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  int x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

StructureReport FiniteGroup::structure() const {
  StructureReport report;
  report.abelian = true;
  for (int a = 0; a < order_ && report.abelian; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) {
        report.abelian = false;
        break;
      }

  std::set<int> squares;
  for (int a = 0; a < order_; ++a) squares.insert(mul(a, a));
  report.squares.assign(squares.begin(), squares.end());
  report.boolean =
      squares.size() == 1 && *squares.begin() == identity_;

  long exponent = 1;
  for (int a = 0; a < order_; ++a)
    exponent = std::lcm(exponent, static_cast<long>(element_order(a)));
  report.exponent = exponent;

  for (int z = 0; z < order_; ++z) {
    bool central = true;
    for (int a = 0; a < order_; ++a)
      if (mul(z, a) != mul(a, z)) {
        central = false;
        break;
      }
    if (central) report.center.push_back(z);
  }
  return report;
}

std::vector<int> FiniteGroup::subgroup_closure(
    const std::vector<int> &generators) const {
  std::vector<char> in(order_, 0);
  std::vector<int> queue{identity_};
  in[identity_] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int gen : generators) {
      const int next = mul(queue[head], gen);
      if (!in[next]) {
        in[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<int>> FiniteGroup::index2_subgroups() const {
  if (order_ % 2 != 0) return {};

  // Index-2 subgroups are kernels of characters into {-1,1}; every such
  // character factors through G modulo squares and commutators.
  std::vector<int> normal_gens;
  for (int a = 0; a < order_; ++a) normal_gens.push_back(mul(a, a));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      normal_gens.push_back(mul(mul(a, b), mul(inv_[a], inv_[b])));
  const std::vector<int> base = subgroup_closure(normal_gens);

  std::vector<char> in_base(order_, 0);
  for (int x : base) in_base[x] = 1;

  // Coset labels; the quotient is a Boolean group.
  std::vector<int> coset(order_, -1);
  std::vector<int> reps;
  for (int x = 0; x < order_; ++x) {
    if (coset[x] >= 0) continue;
    const int label = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int n : base) coset[mul(x, n)] = label;
  }
  const int q = static_cast<int>(reps.size());
  if (q <= 1) return {};

  auto coset_mul = [&](int i, int j) { return coset[mul(reps[i], reps[j])]; };

  // Greedy F2-basis of the quotient with coordinates per coset.
  std::vector<std::vector<char>> coords(q);
  coords[coset[identity_]] = {};
  std::vector<char> reached(q, 0);
  reached[coset[identity_]] = 1;
  std::vector<int> basis;
  std::vector<int> frontier{coset[identity_]};
  for (int c = 0; c < q; ++c) {
    if (reached[c]) continue;
    basis.push_back(c);
    const std::size_t dim = basis.size();
    std::vector<int> snapshot;
    for (int s = 0; s < q; ++s)
      if (reached[s]) snapshot.push_back(s);
    for (int s : snapshot) {
      const int t = coset_mul(s, c);
      if (reached[t]) continue;
      reached[t] = 1;
      coords[t] = coords[s];
      coords[t].resize(dim, 0);
      coords[t][dim - 1] ^= 1;
    }
  }
  const int dim = static_cast<int>(basis.size());
  for (int c = 0; c < q; ++c) coords[c].resize(dim, 0);

  std::vector<std::vector<int>> result;
  for (int chi = 1; chi < (1 << dim); ++chi) {
    std::vector<int> members;
    for (int x = 0; x < order_; ++x) {
      int dot = 0;
      for (int i = 0; i < dim; ++i)
        if (chi & (1 << i)) dot ^= coords[coset[x]][i];
      if (dot == 0) members.push_back(x);
    }
    result.push_back(std::move(members));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::pair<FiniteGroup, std::vector<int>> FiniteGroup::subgroup_as_group(
    const std::vector<int> &elements) const {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(order_, -1);
  const int m = static_cast<int>(sorted.size());
  for (int i = 0; i < m; ++i) pos[sorted[i]] = i;

  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int prod = mul(sorted[i], sorted[j]);
      if (pos[prod] < 0)
        throw Error(ErrorKind::Precondition, "subset is not closed");
      table[i][j] = pos[prod];
    }
  return {from_cayley(table, pos[identity_]), sorted};
}

GroupAction GroupAction::create(FiniteGroup group, int degree,
                                std::vector<std::vector<int>> map) {
  const int n = group.order();
  if (static_cast<int>(map.size()) != n)
    throw Error(ErrorKind::Precondition, "action map has wrong row count");
  for (const auto &row : map) {
    if (static_cast<int>(row.size()) != degree)
      throw Error(ErrorKind::Precondition, "action row has wrong length");
    for (int x : row)
      if (x < 0 || x >= degree)
        throw Error(ErrorKind::Precondition, "action image out of range");
  }
  for (int x = 0; x < degree; ++x)
    if (map[group.identity()][x] != x)
      throw Error(ErrorKind::Precondition,
                  "identity moves point " + std::to_string(x));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < degree; ++x)
        if (map[group.mul(g, h)][x] != map[g][map[h][x]])
          throw Error(ErrorKind::Precondition,
                      "not a homomorphism at " + triple(g, h, x));
  for (int g = 0; g < n; ++g) {
    if (g == group.identity()) continue;
    bool moves = false;
    for (int x = 0; x < degree; ++x)
      if (map[g][x] != x) {
        moves = true;
        break;
      }
    if (!moves)
      throw Error(ErrorKind::NotEffective,
                  "element " + std::to_string(g) + " acts as the identity");
  }

  GroupAction action;
  action.group_ = std::move(group);
  action.degree_ = degree;
  action.map_.resize(static_cast<std::size_t>(n) * degree);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < degree; ++x) action.map_[g * degree + x] = map[g][x];
  return action;
}

GroupAction GroupAction::left_translations(const FiniteGroup &group) {
  const int n = group.order();
  std::vector<std::vector<int>> map(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) map[g][x] = group.mul(g, x);
  return create(group, n, std::move(map));
}

Perm GroupAction::perm(int g) const {
  std::vector<int> im(degree_);
  for (int x = 0; x < degree_; ++x) im[x] = apply(g, x);
  return Perm(std::move(im));
}

std::vector<Perm> GroupAction::perms() const {
  std::vector<Perm> out;
  out.reserve(group_.order());
  for (int g = 0; g < group_.order(); ++g) out.push_back(perm(g));
  return out;
}

std::vector<int> GroupAction::orbit(int x) const {
  std::set<int> seen;
  for (int g = 0; g < group_.order(); ++g) seen.insert(apply(g, x));
  return {seen.begin(), seen.end()};
}

bool GroupAction::transitive() const {
  return static_cast<int>(orbit(0).size()) == degree_;
}

std::pair<FiniteGroup, GroupAction> group_from_generators(
    const std::vector<Perm> &generators, int degree, int order_cap) {
  for (const Perm &g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::Precondition, "generator degree mismatch");

  std::vector<Perm> elements{Perm::identity(degree)};
  std::map<Perm, int> index{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm &gen : generators) {
      Perm next = elements[head] * gen;
      if (index.contains(next)) continue;
      if (static_cast<int>(elements.size()) >= order_cap)
        throw Error(ErrorKind::OrderLimitExceeded,
                    "closure exceeds cap " + std::to_string(order_cap));
      index.emplace(next, static_cast<int>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::vector<int>> map(n, std::vector<int>(degree));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = index.at(elements[i] * elements[j]);
    map[i] = elements[i].images();
  }
  FiniteGroup group = FiniteGroup::from_cayley(table, 0);
  GroupAction action = GroupAction::create(group, degree, std::move(map));
  return {std::move(group), std::move(action)};
}

namespace {

std::vector<int> greedy_generators(const FiniteGroup &g,
                                   const std::vector<int> &seed) {
  std::vector<int> gens = seed;
  std::vector<int> closure = g.subgroup_closure(gens);
  for (int x = 0; x < g.order(); ++x) {
    if (std::binary_search(closure.begin(), closure.end(), x)) continue;
    gens.push_back(x);
    closure = g.subgroup_closure(gens);
    if (static_cast<int>(closure.size()) == g.order()) break;
  }
  return gens;
}

// Extends a partial map defined on the closure of the assigned generators;
// returns false on any inconsistency.
bool extend_homomorphism(const FiniteGroup &g, const FiniteGroup &h,
                         const std::vector<int> &gens_assigned,
                         std::vector<int> &phi) {
  std::vector<int> defined;
  for (int x = 0; x < g.order(); ++x)
    if (phi[x] >= 0) defined.push_back(x);
  for (std::size_t head = 0; head < defined.size(); ++head) {
    for (int s : gens_assigned) {
      const int x = g.mul(defined[head], s);
      const int y = h.mul(phi[defined[head]], phi[s]);
      if (phi[x] < 0) {
        phi[x] = y;
        defined.push_back(x);
      } else if (phi[x] != y) {
        return false;
      }
    }
  }
  return true;
}

bool injective_on_defined(const FiniteGroup &h, const std::vector<int> &phi) {
  std::vector<char> used(h.order(), 0);
  for (int y : phi) {
    if (y < 0) continue;
    if (used[y]) return false;
    used[y] = 1;
  }
  return true;
}

struct IsoSearch {
  const FiniteGroup &g;
  const FiniteGroup &h;
  std::vector<int> gens;
  std::vector<std::vector<int>> candidates;  // per generator, in h-index order

  std::optional<std::vector<int>> run() {
    std::vector<int> phi(g.order(), -1);
    phi[g.identity()] = h.identity();
    return descend(0, phi);
  }

  std::optional<std::vector<int>> descend(std::size_t k, std::vector<int> phi) {
    if (k == gens.size()) {
      for (int x = 0; x < g.order(); ++x)
        if (phi[x] < 0) return std::nullopt;
      // The BFS extension checks the law along generator edges only; confirm
      // it on the full table before accepting.
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          if (phi[g.mul(x, y)] != h.mul(phi[x], phi[y])) return std::nullopt;
      return phi;
    }
    const int gen = gens[k];
    std::vector<int> assigned(gens.begin(), gens.begin() + k + 1);
    for (int image : candidates[k]) {
      std::vector<int> next = phi;
      if (next[gen] >= 0 && next[gen] != image) continue;
      next[gen] = image;
      if (!extend_homomorphism(g, h, assigned, next)) continue;
      if (!injective_on_defined(h, next)) continue;
      if (auto found = descend(k + 1, std::move(next))) return found;
    }
    return std::nullopt;
  }
};

std::optional<std::vector<int>> isomorphism_impl(const FiniteGroup &g,
                                                 const FiniteGroup &h,
                                                 std::optional<std::pair<int, int>> pin,
                                                 int order_cap) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > order_cap)
    throw Error(ErrorKind::OrderLimitExceeded,
                "order " + std::to_string(g.order()) + " exceeds cap " +
                    std::to_string(order_cap));

  // Cheap fingerprints before any backtracking.
  auto order_multiset = [](const FiniteGroup &x) {
    std::vector<int> orders(x.order());
    for (int a = 0; a < x.order(); ++a) orders[a] = x.element_order(a);
    std::sort(orders.begin(), orders.end());
    return orders;
  };
  if (order_multiset(g) != order_multiset(h)) return std::nullopt;
  const StructureReport sg = g.structure();
  const StructureReport sh = h.structure();
  if (sg.center.size() != sh.center.size()) return std::nullopt;
  if (sg.squares.size() != sh.squares.size()) return std::nullopt;
  if (sg.abelian != sh.abelian) return std::nullopt;

  std::vector<int> seed;
  if (pin) seed.push_back(pin->first);
  IsoSearch search{g, h, greedy_generators(g, seed), {}};
  for (std::size_t k = 0; k < search.gens.size(); ++k) {
    std::vector<int> cands;
    if (pin && k == 0 && search.gens[0] == pin->first) {
      cands.push_back(pin->second);
    } else {
      const int ord = g.element_order(search.gens[k]);
      for (int y = 0; y < h.order(); ++y)
        if (h.element_order(y) == ord) cands.push_back(y);
    }
    search.candidates.push_back(std::move(cands));
  }
  return search.run();
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup &g,
                                                 const FiniteGroup &h,
                                                 int order_cap) {
  return isomorphism_impl(g, h, std::nullopt, order_cap);
}

std::optional<std::vector<int>> find_isomorphism_pinned(const FiniteGroup &g,
                                                        const FiniteGroup &h,
                                                        int pin_from, int pin_to,
                                                        int order_cap) {
  if (g.element_order(pin_from) != h.element_order(pin_to)) return std::nullopt;
  return isomorphism_impl(g, h, std::make_pair(pin_from, pin_to), order_cap);
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  const int n = a.order();
  const int m = b.order();
  std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
  for (int i = 0; i < n * m; ++i)
    for (int j = 0; j < n * m; ++j) {
      const int x = a.mul(i / m, j / m);
      const int y = b.mul(i % m, j % m);
      table[i][j] = x * m + y;
    }
  return FiniteGroup::from_cayley(table, a.identity() * m + b.identity());
}

}  // namespace isoforge
