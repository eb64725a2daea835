#include "isoforge/perm.hpp"

#include <string>

#include "isoforge/error.hpp"

namespace isoforge {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    const int y = images_[x];
    if (y < 0 || y >= n || seen[y])
      throw Error(ErrorKind::Precondition,
                  "not a bijection at point " + std::to_string(x));
    seen[y] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(degree);
  for (int x = 0; x < degree; ++x) im[x] = x;
  return Perm(std::move(im));
}

Perm Perm::transposition(int degree, int a, int b) {
  std::vector<int> im(degree);
  for (int x = 0; x < degree; ++x) im[x] = x;
  im[a] = b;
  im[b] = a;
  return Perm(std::move(im));
}

Perm Perm::cycle(int degree, const std::vector<int> &points) {
  std::vector<int> im(degree);
  for (int x = 0; x < degree; ++x) im[x] = x;
  const int k = static_cast<int>(points.size());
  for (int i = 0; i < k; ++i) im[points[i]] = points[(i + 1) % k];
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> im(degree());
  for (int x = 0; x < degree(); ++x) im[images_[x]] = x;
  return Perm(std::move(im));
}

Perm operator*(const Perm &a, const Perm &b) {
  std::vector<int> im(a.degree());
  for (int x = 0; x < a.degree(); ++x) im[x] = a.images_[b.images_[x]];
  return Perm(std::move(im));
}

}  // namespace isoforge
