#pragma once

#include <vector>

#include "caystab/bigint.hpp"
#include "caystab/perm.hpp"

namespace caystab {

/// A permutation group held as generators plus a base and strong generating
/// set (deterministic Schreier-Sims construction with explicit transversals).
///
/// The order is the product of the orbit lengths along the stabilizer chain
/// and is exact. Instances are immutable once built.
class PermGroup {
public:
  /// Builds the stabilizer chain for the group generated by `generators`.
  /// Identity generators are dropped. Throws InvalidParameterError on a
  /// degree mismatch.
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return input_gens_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  /// The base: one point per chain level, each moved by that level's
  /// stabilizer.
  std::vector<int> base() const;

  /// Membership by sifting through the chain.
  bool contains(const Permutation& p) const;

  /// Sifts p through the chain; the residue is the identity exactly when p
  /// is a member.
  Permutation sift(const Permutation& p) const;

private:
  struct Level {
    int base_point = -1;
    std::vector<Permutation> gens;
    std::vector<int> orbit;              // discovery order, orbit[0] == base_point
    std::vector<int> orbit_pos;          // point -> index in orbit, or -1
    std::vector<Permutation> transversal; // transversal[i](base_point) == orbit[i]
  };

  void extend(int level, const Permutation& g);
  void grow_orbit(int level, std::size_t first_new_gen);
  // Sifts p starting at `level`; inserts the residue if p is not yet a member.
  void sift_in(int level, Permutation p);

  int degree_ = 0;
  std::vector<Permutation> input_gens_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

} // namespace caystab
