#pragma once

#include <compare>
#include <vector>

namespace isoforge {

/// A permutation of {0..degree-1}, stored as its image array.
class Perm {
 public:
  explicit Perm(std::vector<int> images);  // throws unless a bijection

  static Perm identity(int degree);
  static Perm transposition(int degree, int a, int b);
  static Perm cycle(int degree, const std::vector<int> &points);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  // (a * b)(x) = a(b(x)); b acts first.
  friend Perm operator*(const Perm &a, const Perm &b);

  friend bool operator==(const Perm &a, const Perm &b) = default;
  friend auto operator<=>(const Perm &a, const Perm &b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

}  // namespace isoforge
