#pragma once

#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "caystab/bigint.hpp"
#include "caystab/graph.hpp"
#include "caystab/group.hpp"

namespace caystab {

/// A symmetric, colored subset of a finite group.
///
/// Invariants enforced at construction: s in S implies s^-1 in S, and
/// color(s) == color(s^-1). Labels are color *sets*: ordinary colorings use
/// singletons, and scaling merges the sets of colliding preimages. The group
/// is held by pointer and must outlive the set.
class ConnectionSet {
public:
  /// All members labeled {0}.
  ConnectionSet(const FiniteGroup& group, std::vector<int> members);

  /// Explicit color sets per member; every set must be non-empty.
  ConnectionSet(const FiniteGroup& group,
                std::map<int, std::set<int>> colored_members);

  const FiniteGroup& group() const { return *group_; }
  const std::vector<int>& members() const { return members_; } // sorted
  bool contains(int s) const;
  const std::set<int>& colors_of(int s) const;
  bool includes_identity() const;
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.colors_ == b.colors_;
  }

private:
  const FiniteGroup* group_;
  std::vector<int> members_;
  std::map<int, std::set<int>> colors_;
};

/// The Cayley graph of S over its group: vertices are the group elements and
/// {g, h} is an edge with the label of s whenever g = s*h. The identity in S
/// produces a loop at every vertex. Distinct color sets among edge labels
/// are mapped to contiguous integer colors in lexicographic order.
ColoredGraph cayley_graph(const ConnectionSet& s);

/// Elementwise power map: members {s^k}, where the color set of each image
/// is the union over all of its preimages in S. Symmetry is preserved.
ConnectionSet scaled_set(const ConnectionSet& s, long long k);

struct ScalingHypothesis {
  /// The power map s -> s^k is injective on every color class separately.
  bool holds = false;
  /// gcd(k, |G|) == 1 — the blanket sufficient condition.
  bool gcd_coprime = false;
};

ScalingHypothesis scaling_hypothesis(const ConnectionSet& s, long long k);

struct ScalingLemmaReport {
  long long k = 0;
  int generator_count = 0;
  std::vector<int> failed_generators; // indices into the generator list
  bool all_pass = false;
};

/// Checks that every generator of Aut(Cay(G;S)) is also an automorphism of
/// Cay(G;kS). Preconditions (abelian G, scaling hypothesis) are enforced
/// with PreconditionError; with them satisfied, a failed generator would be
/// a genuine violation, reported rather than thrown.
ScalingLemmaReport verify_scaling_lemma(const ConnectionSet& s, long long k);

/// Exact number of walks of length `length` >= 1 from v to w. Colors are
/// ignored; a loop contributes one step.
BigInt walk_count(const ColoredGraph& g, int v, int w, int length);

struct WalkModReport {
  int prime = 0;
  int pairs_checked = 0;
  struct Violation {
    int v, w;
    BigInt count;
    bool adjacent_in_scaled;
  };
  std::vector<Violation> violations;
  bool ok = false;
};

/// For every vertex pair (v, w): the number of length-p walks in Cay(G;S1)
/// is nonzero mod p exactly when v, w are adjacent in Cay(G; pS1).
/// Requires an abelian group and the power map injective on all of S1.
WalkModReport walk_count_mod_check(const ConnectionSet& s1, int p);

/// Parses the connection-set mini-language over a group, e.g.
/// "1,-1@0,2,-2@1". Elements are integers (cyclic groups: residues mod n;
/// other groups: element indices) or residue tuples "(i,j)"; a leading '-'
/// takes the inverse; "@c" attaches color c (default 0). Symmetric closure
/// is NOT applied: asymmetric input is an error.
ConnectionSet parse_connection_set(const FiniteGroup& group,
                                   std::string_view text);

/// Renders a member as it appears in reports: residue string for cyclic
/// groups, "(i,j)" tuples for other abelian groups, words in a and x for
/// semidirect products.
std::string element_display(const FiniteGroup& group, int g);

} // namespace caystab
