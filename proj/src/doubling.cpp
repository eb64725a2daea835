#include "isoforge/doubling.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "isoforge/error.hpp"
#include "isoforge/io.hpp"

namespace isoforge {

std::pair<FiniteGroup, DoubleStructure> double_group(const BasePair &bp) {
  const FiniteGroup &h = bp.group;
  const int n = h.order();
  if (!h.structure().abelian)
    throw Error(ErrorKind::InvalidBasePair, "base group is not abelian");
  if (bp.p == h.identity())
    throw Error(ErrorKind::InvalidBasePair, "p is the identity");
  if (h.mul(bp.p, bp.p) != h.identity())
    throw Error(ErrorKind::InvalidBasePair, "p is not an involution");

  // Carrier: (x,1) at index x, (x,-1) at index n+x.
  auto idx = [n](int x, int j) { return j > 0 ? x : n + x; };
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      table[idx(x, 1)][idx(y, 1)] = idx(h.mul(x, y), 1);
      table[idx(x, 1)][idx(y, -1)] = idx(h.mul(x, y), -1);
      table[idx(x, -1)][idx(y, 1)] = idx(h.mul(x, h.inv(y)), -1);
      table[idx(x, -1)][idx(y, -1)] =
          idx(h.mul(h.mul(x, h.inv(y)), bp.p), 1);
    }
  FiniteGroup whole = FiniteGroup::from_cayley(table, h.identity());

  DoubleStructure ds;
  ds.subgroup_h.resize(n);
  for (int x = 0; x < n; ++x) ds.subgroup_h[x] = x;
  ds.p_tilde = bp.p;
  ds.whole = whole;
  return {std::move(whole), std::move(ds)};
}

std::optional<DoubleStructure> recognize_double(const FiniteGroup &g) {
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
    if (!constant || q < 0) continue;
    if (q == g.identity()) continue;
    if (g.mul(q, q) != g.identity()) continue;

    DoubleStructure ds;
    ds.whole = g;
    ds.subgroup_h = k;
    ds.p_tilde = q;
    return ds;
  }
  return std::nullopt;
}

Perm phi_automorphism(const DoubleStructure &ds) {
  const FiniteGroup &g = ds.whole;
  std::vector<char> inside(g.order(), 0);
  for (int x : ds.subgroup_h) inside[x] = 1;
  std::vector<int> im(g.order());
  for (int z = 0; z < g.order(); ++z)
    im[z] = inside[z] ? z : g.mul(z, ds.p_tilde);
  Perm phi(std::move(im));
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (phi[g.mul(x, y)] != g.mul(phi[x], phi[y]))
        throw Error(ErrorKind::Precondition,
                    "phi is not an automorphism; structure is not a double");
  assert((phi * phi).is_identity());
  return phi;
}

bool base_pair_isomorphic(const BasePair &a, const BasePair &b, int order_cap) {
  return find_isomorphism_pinned(a.group, b.group, a.p, b.p, order_cap)
      .has_value();
}

namespace {

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup::from_cayley(table, 0);
}

FiniteGroup boolean_group(int n) {
  const int size = 1 << n;
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) table[i][j] = i ^ j;
  return FiniteGroup::from_cayley(table, 0);
}

FiniteGroup dihedral_group(int n) {
  // r^i at i, r^i s at n+i; s r s = r^-1.
  const int size = 2 * n;
  auto rot = [n](int i) { return ((i % n) + n) % n; };
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      table[i][j] = rot(i + j);
      table[i][n + j] = n + rot(i + j);
      table[n + i][j] = n + rot(i - j);
      table[n + i][n + j] = rot(i - j);
    }
  return FiniteGroup::from_cayley(table, 0);
}

FiniteGroup quaternion_group() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto enc = [](int sign, int unit) {
    return 2 * unit + (sign < 0 ? 1 : 0);
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  // unit multiplication: result (sign, unit) for units 0..3 = 1,i,j,k
  static const int unit_prod[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_prod[4][4] = {
      {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, sa = a % 2 ? -1 : +1;
      const int ub = b / 2, sb = b % 2 ? -1 : +1;
      table[a][b] = enc(sa * sb * sign_prod[ua][ub], unit_prod[ua][ub]);
    }
  return FiniteGroup::from_cayley(table, 0);
}

ZooEntry perm_group_entry(const std::string &name, std::vector<Perm> gens,
                          int degree, int order_cap) {
  auto [group, action] = group_from_generators(gens, degree, order_cap);
  return ZooEntry{name, std::move(group), std::move(action)};
}

int parse_zoo_int(const std::string &name, const std::string &text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size() || value < 0)
      throw Error(ErrorKind::UnknownName, "bad parameter in '" + name + "'");
    return value;
  } catch (const std::logic_error &) {
    throw Error(ErrorKind::UnknownName, "bad parameter in '" + name + "'");
  }
}

}  // namespace

ZooEntry zoo(const std::string &name, int order_cap) {
  if (name == "trivial")
    return {name, FiniteGroup::from_cayley({{0}}, 0), std::nullopt};
  if (name == "quaternion") return {name, quaternion_group(), std::nullopt};

  const auto colon = name.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::UnknownName, "unknown zoo name '" + name + "'");
  const std::string head = name.substr(0, colon);
  const std::string tail = name.substr(colon + 1);

  if (head == "cyclic") {
    const int n = parse_zoo_int(name, tail);
    if (n < 1) throw Error(ErrorKind::UnknownName, "cyclic:n needs n >= 1");
    return {name, cyclic_group(n), std::nullopt};
  }
  if (head == "boolean") {
    const int n = parse_zoo_int(name, tail);
    if (n < 0 || n > 14)
      throw Error(ErrorKind::UnknownName, "boolean:n needs 0 <= n <= 14");
    return {name, boolean_group(n), std::nullopt};
  }
  if (head == "dihedral") {
    const int n = parse_zoo_int(name, tail);
    if (n < 1) throw Error(ErrorKind::UnknownName, "dihedral:n needs n >= 1");
    return {name, dihedral_group(n), std::nullopt};
  }
  if (head == "sym") {
    const int n = parse_zoo_int(name, tail);
    if (n < 1) throw Error(ErrorKind::UnknownName, "sym:n needs n >= 1");
    std::vector<Perm> gens;
    if (n >= 2) gens.push_back(Perm::transposition(n, 0, 1));
    if (n >= 3) {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      gens.push_back(Perm::cycle(n, all));
    }
    return perm_group_entry(name, gens, n, order_cap);
  }
  if (head == "alt") {
    const int n = parse_zoo_int(name, tail);
    if (n < 3) throw Error(ErrorKind::UnknownName, "alt:n needs n >= 3");
    std::vector<Perm> gens{Perm::cycle(n, {0, 1, 2})};
    if (n > 3) {
      std::vector<int> long_cycle;
      if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) long_cycle.push_back(i);
      } else {
        for (int i = 1; i < n; ++i) long_cycle.push_back(i);
      }
      gens.push_back(Perm::cycle(n, long_cycle));
    }
    return perm_group_entry(name, gens, n, order_cap);
  }
  if (head == "IS") {
    const int n = parse_zoo_int(name, tail);
    if (n < 1 || n > 10)
      throw Error(ErrorKind::UnknownName, "IS:n needs 1 <= n <= 10");
    // p(n) = (-1,1,...,1): index 1 in the xor encoding; the double keeps the
    // base block first, so p~ is again index 1.
    auto [inner, inner_ds] = double_group({boolean_group(n), 1});
    auto [outer, outer_ds] = double_group({std::move(inner), inner_ds.p_tilde});
    return {name, std::move(outer), std::nullopt};
  }
  if (head == "double") {
    const auto last = name.rfind(':');
    if (last == colon)
      throw Error(ErrorKind::UnknownName,
                  "double needs '<group-file>:<p-index>'");
    const std::string path = name.substr(colon + 1, last - colon - 1);
    const int p = parse_zoo_int(name, name.substr(last + 1));
    NamedGroup base = load_group(path);
    auto [group, ds] = double_group({std::move(base.group), p});
    return {name, std::move(group), std::nullopt};
  }
  throw Error(ErrorKind::UnknownName, "unknown zoo name '" + name + "'");
}

std::vector<ZooEntry> curated_zoo() {
  std::vector<ZooEntry> out;
  out.push_back(zoo("trivial"));
  for (int n = 2; n <= 8; ++n) out.push_back(zoo("cyclic:" + std::to_string(n)));
  out.push_back(zoo("boolean:2"));
  out.push_back(zoo("boolean:3"));
  out.push_back({"Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4)),
                 std::nullopt});
  out.push_back(zoo("sym:3"));
  out.push_back(zoo("dihedral:4"));
  out.push_back(zoo("quaternion"));
  out.push_back(zoo("alt:4"));
  out.push_back(zoo("sym:4"));
  out.push_back(zoo("dihedral:6"));
  out.push_back(zoo("IS:1"));
  out.push_back(zoo("IS:2"));
  {
    auto [g, ds] = double_group({cyclic_group(4), 2});
    out.push_back({"double(cyclic:4)", std::move(g), std::nullopt});
  }
  {
    auto [g, ds] = double_group({boolean_group(2), 1});
    out.push_back({"double(boolean:2)", std::move(g), std::nullopt});
  }
  return out;
}

}  // namespace isoforge
