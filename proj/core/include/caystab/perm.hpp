#pragma once

#include <compare>
#include <string>
#include <vector>

namespace caystab {

/// A permutation of {0, ..., n-1}, stored as its image array.
class Permutation {
public:
  /// Throws InvalidParameterError unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Composition acting left-to-right on points: (a.then(b))(v) = b(a(v)).
  Permutation then(const Permutation& next) const;

  Permutation inverse() const;

  /// Cycle notation with fixed points omitted; the identity prints as "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

} // namespace caystab
