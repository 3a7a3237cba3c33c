#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caystab/bigint.hpp"
#include "caystab/cayley.hpp"
#include "caystab/graph.hpp"
#include "caystab/perm.hpp"

namespace caystab {

/// Verdict record for the stability of one graph.
///
/// X is stable when Aut BX is exactly the obvious subgroup Aut X x S2; since
/// that subgroup embeds faithfully, the verdict reduces to the exact order
/// comparison |Aut BX| == 2*|Aut X|. Disconnected or twinned graphs are
/// never stable; `reason` says which precondition failed. When unstable and
/// the preconditions hold, `witness` is a generator of Aut BX that sifts to
/// a non-member of Aut X x S2.
struct StabilityReport {
  bool connected = false;
  bool twin_free = false;
  BigInt aut_x_order = 0;
  BigInt aut_bx_order = 0;
  bool stable = false;
  std::optional<Permutation> witness;
  std::string reason;
};

StabilityReport stability_check(const ColoredGraph& x);

struct SweepOptions {
  bool two_colored = false;  // color the connection set per inverse-pair
  bool include_loops = false; // put the identity in every enumerated set
  int jobs = 1;
};

struct SweepInstance {
  std::vector<int> members; // connection-set element indices, sorted
  StabilityReport report;
};

struct SweepSummary {
  std::string group_spec;
  int total = 0;
  int disconnected = 0;
  int has_twins = 0;
  int checked = 0;
  int stable = 0;
  int unstable = 0;
  std::vector<SweepInstance> unstable_instances; // must stay empty

  bool ok() const { return unstable == 0; }
};

/// Enumerates every symmetric connection set of an abelian group of odd
/// order (all subsets of the inverse pairs, identity excluded unless
/// include_loops) and runs stability_check on each connected twin-free
/// instance. Instances are ordered by connection-set encoding; `jobs` > 1
/// distributes instances across threads with deterministic aggregation.
/// Refuses non-abelian or even-order groups.
SweepSummary theorem_sweep(const FiniteGroup& group,
                           const SweepOptions& options = {});

struct ChaoInstance {
  std::vector<int> set; // symmetric S as residues
  bool edge_transitive = false;
  bool coset = false;
};

struct ChaoReport {
  int prime = 0;
  int instances = 0;
  std::vector<ChaoInstance> disagreements; // must stay empty
  bool ok() const { return disagreements.empty(); }
};

/// For every non-empty symmetric S over Z_p (p an odd prime <= 17): the
/// edge-transitivity of Cay(Z_p; S), computed from edge orbits, must agree
/// with the multiplicative coset test (S*z^-1 closed under multiplication
/// for z in S).
ChaoReport chao_check(int p);

struct Example21Report {
  bool connected = false;
  bool twin_free = false;
  BigInt aut_x_order = 0;
  BigInt aut_bx_order = 0;
  bool unstable = false;
  bool witness_valid = false;
  StabilityReport detail;

  /// Expected exact orders for this instance.
  static constexpr int expected_aut_x = 42;
  static constexpr int expected_aut_bx = 252;

  bool ok() const {
    return connected && twin_free && aut_x_order == expected_aut_x &&
           aut_bx_order == expected_aut_bx && unstable && witness_valid;
  }
};

/// Builds the nonabelian group of order 21 (<a, x | a^3 = x^7 = 1,
/// a^-1 x a = x^2>) with connection set {a^+-1, x^+-1, (ax)^+-1}, and checks
/// the known instability: the graph is twin-free and connected with
/// |Aut X| = 42 and |Aut BX| = 252, and the witness is a certified
/// non-member of Aut X x S2.
Example21Report reproduce_example_21();

/// The connection set of reproduce_example_21 over `group`, which must be
/// the order-21 semidirect product SD(7,3,2).
ConnectionSet example_21_connection_set(const FiniteGroup& group);

} // namespace caystab
