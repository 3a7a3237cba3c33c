#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace caystab {

/// A finite group materialized as a full multiplication table.
///
/// Target orders are small (a few hundred at most), so O(n^2) storage keeps
/// every later operation a table lookup. Elements are indices 0..order-1.
/// Instances are immutable after construction and safe to share across
/// threads.
class FiniteGroup {
public:
  enum class Kind { Abelian, Semidirect };

  int order() const { return order_; }
  int identity() const { return identity_; }
  bool is_abelian() const { return abelian_; }
  Kind kind() const { return kind_; }

  /// Product g*h. Throws InvalidParameterError on a foreign element index.
  int mul(int g, int h) const;
  int inv(int g) const;

  /// g^k for any integer k; k = 0 gives the identity, negative k powers the
  /// inverse.
  int power(int g, long long k) const;

  /// Least k >= 1 with g^k = identity.
  int element_order(int g) const;

  const std::string& element_name(int g) const;

  /// Spec string this group round-trips through parse_group_spec:
  /// "Z9", "Z3xZ3", "SD(7,3,2)".
  const std::string& spec_string() const { return spec_; }

  // Abelian groups: mixed-radix codec between element indices and residue
  // vectors (one residue per factor, first factor least significant).
  const std::vector<int>& abelian_factors() const;
  std::vector<int> to_vector(int g) const;
  int from_vector(const std::vector<int>& residues) const;

  // Semidirect groups: element index encodes (i, j) for x^i a^j as i*m + j.
  struct SemidirectParams {
    int n, m, t;
  };
  const SemidirectParams& semidirect_params() const;

private:
  friend FiniteGroup make_abelian(const std::vector<int>& factors);
  friend FiniteGroup make_semidirect(int n, int m, int t);

  FiniteGroup() = default;
  void finish_construction(); // identity, inverses, table validation

  int order_ = 0;
  int identity_ = 0;
  bool abelian_ = false;
  Kind kind_ = Kind::Abelian;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  std::vector<std::string> names_;
  std::string spec_;
  std::vector<int> factors_;
  SemidirectParams sd_{0, 0, 0};
};

/// Direct sum of cyclic groups of the given orders. Each factor must be >= 2.
FiniteGroup make_abelian(const std::vector<int>& factors);

/// Group of order n*m with presentation <a, x | a^m = x^n = 1, a^-1 x a = x^t>.
/// Requires t^m = 1 (mod n) and gcd(t, n) = 1.
FiniteGroup make_semidirect(int n, int m, int t);

/// Parses the group mini-language: "Z9", "Z3xZ3", "SD(7,3,2)".
/// Case-insensitive; whitespace ignored.
FiniteGroup parse_group_spec(std::string_view spec);

} // namespace caystab
