#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoforge/group.hpp"

namespace isoforge {

/// An abelian group with a distinguished involution.
struct BasePair {
  FiniteGroup group;
  int p = 0;
};

/// Witness that a group is a double: an abelian index-2 subgroup with
/// constant square outside it.
struct DoubleStructure {
  FiniteGroup whole;
  std::vector<int> subgroup_h;  // sorted element indices, index 2, abelian
  int p_tilde = 0;              // the constant square of outside elements
};

// The group on H x {-1,1}: (h,1) block first (indices 0..|H|-1), then (h,-1)
// at |H|+h. Throws InvalidBasePair unless H is abelian, p != e, p^2 = e.
std::pair<FiniteGroup, DoubleStructure> double_group(const BasePair &bp);

// First (canonical subgroup order) abelian index-2 subgroup K with constant
// outside square q, q != e, q^2 = e; absent if none.
std::optional<DoubleStructure> recognize_double(const FiniteGroup &g);

// Fixes the subgroup pointwise, multiplies outside elements by p_tilde.
// Asserted to be an involutive automorphism.
Perm phi_automorphism(const DoubleStructure &ds);

bool base_pair_isomorphic(const BasePair &a, const BasePair &b,
                          int order_cap = kDefaultIsomorphismCap);

struct ZooEntry {
  std::string name;
  FiniteGroup group;
  std::optional<GroupAction> action;  // tautological action, when natural
};

// Grammar: trivial | cyclic:n | boolean:n | dihedral:n | quaternion | sym:n
//          | alt:n | IS:n | double:<group-file>:<p-index>
ZooEntry zoo(const std::string &name, int order_cap = kDefaultClosureCap);

// The curated census universe used by the classification suite.
std::vector<ZooEntry> curated_zoo();

}  // namespace isoforge
