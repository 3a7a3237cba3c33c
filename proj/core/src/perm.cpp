#include "caystab/perm.hpp"

#include <numeric>
#include <sstream>

#include "caystab/errors.hpp"

namespace caystab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw InvalidParameterError("permutation image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < degree(); ++v)
    if (images_[v] != v) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree())
    throw InvalidParameterError("permutation degree mismatch");
  std::vector<int> images(degree());
  for (int v = 0; v < degree(); ++v) images[v] = next.images_[images_[v]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(degree());
  for (int v = 0; v < degree(); ++v) images[images_[v]] = v;
  return Permutation(std::move(images));
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<char> done(degree(), 0);
  bool any = false;
  for (int v = 0; v < degree(); ++v) {
    if (done[v] || images_[v] == v) continue;
    any = true;
    out << '(' << v;
    done[v] = 1;
    for (int w = images_[v]; w != v; w = images_[w]) {
      out << ' ' << w;
      done[w] = 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

} // namespace caystab
