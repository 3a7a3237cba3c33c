#include "caystab/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <thread>

#include "caystab/autgroup.hpp"
#include "caystab/errors.hpp"
#include "caystab/products.hpp"

namespace caystab {

namespace {

// Generators of the subgroup Aut X x S2 inside Sym(2n), under the double
// cover's numbering (v, i) = v + i*n: each Aut X generator acts on both
// layers at once, and the swap exchanges the layers.
std::vector<Permutation> product_subgroup_generators(const PermGroup& aut_x) {
  const int n = aut_x.degree();
  std::vector<Permutation> gens;
  for (const auto& phi : aut_x.generators()) {
    std::vector<int> images(2 * n);
    for (int v = 0; v < n; ++v) {
      images[v] = phi(v);
      images[v + n] = phi(v) + n;
    }
    gens.emplace_back(std::move(images));
  }
  std::vector<int> swap_images(2 * n);
  for (int v = 0; v < n; ++v) {
    swap_images[v] = v + n;
    swap_images[v + n] = v;
  }
  gens.emplace_back(std::move(swap_images));
  return gens;
}

} // namespace

StabilityReport stability_check(const ColoredGraph& x) {
  StabilityReport report;
  report.connected = is_connected(x);
  report.twin_free = is_twin_free(x);

  ColoredGraph bx = double_cover(x);
  PermGroup aut_x = automorphism_group(x);
  PermGroup aut_bx = automorphism_group(bx);
  report.aut_x_order = aut_x.order();
  report.aut_bx_order = aut_bx.order();

  bool orders_match = report.aut_bx_order == 2 * report.aut_x_order;
  report.stable = report.connected && report.twin_free && orders_match;

  if (!report.connected)
    report.reason = "disconnected";
  else if (!report.twin_free)
    report.reason = "has twins";

  if (!orders_match) {
    // certify instability: some generator of Aut BX lies outside Aut X x S2
    PermGroup obvious(2 * x.vertex_count(), product_subgroup_generators(aut_x));
    for (const auto& gen : aut_bx.generators()) {
      if (!obvious.contains(gen)) {
        report.witness = gen;
        break;
      }
    }
  }
  return report;
}

SweepSummary theorem_sweep(const FiniteGroup& group, const SweepOptions& options) {
  if (!group.is_abelian())
    throw PreconditionError(
        "sweep requires an abelian group: the order-21 semidirect example "
        "shows the statement fails without commutativity");
  if (group.order() % 2 == 0)
    throw PreconditionError("sweep requires a group of odd order");

  // inverse pairs {s, -s}; odd order means no involutions
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < group.order(); ++s) {
    if (s == group.identity()) continue;
    int t = group.inv(s);
    if (s < t) pairs.emplace_back(s, t);
  }
  const int pair_count = static_cast<int>(pairs.size());
  const std::uint64_t total = std::uint64_t{1} << pair_count;

  SweepSummary summary;
  summary.group_spec = group.spec_string();
  summary.total = static_cast<int>(total);

  enum class Outcome { Disconnected, HasTwins, Stable, Unstable };
  std::vector<Outcome> outcomes(total);
  std::vector<SweepInstance> instances(total);

  auto run_instance = [&](std::uint64_t mask) {
    std::map<int, std::set<int>> members;
    int chosen = 0;
    for (int j = 0; j < pair_count; ++j) {
      if (!(mask >> j & 1)) continue;
      int color = options.two_colored ? chosen % 2 : 0;
      members[pairs[j].first] = {color};
      members[pairs[j].second] = {color};
      ++chosen;
    }
    if (options.include_loops) members[group.identity()] = {0};

    ConnectionSet s(group, std::move(members));
    ColoredGraph x = cayley_graph(s);
    if (!is_connected(x)) {
      outcomes[mask] = Outcome::Disconnected;
      return;
    }
    if (!is_twin_free(x)) {
      outcomes[mask] = Outcome::HasTwins;
      return;
    }
    StabilityReport report = stability_check(x);
    outcomes[mask] = report.stable ? Outcome::Stable : Outcome::Unstable;
    if (!report.stable)
      instances[mask] = SweepInstance{s.members(), std::move(report)};
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::uint64_t mask = 0; mask < total; ++mask) run_instance(mask);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::uint64_t mask = next.fetch_add(1);
        if (mask >= total) return;
        run_instance(mask);
      }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  // deterministic aggregation in connection-set encoding order
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    switch (outcomes[mask]) {
      case Outcome::Disconnected: ++summary.disconnected; break;
      case Outcome::HasTwins: ++summary.has_twins; break;
      case Outcome::Stable:
        ++summary.checked;
        ++summary.stable;
        break;
      case Outcome::Unstable:
        ++summary.checked;
        ++summary.unstable;
        summary.unstable_instances.push_back(std::move(instances[mask]));
        break;
    }
  }
  return summary;
}

ChaoReport chao_check(int p) {
  if (p < 3 || p > 17) throw InvalidParameterError("prime must be odd, 3 <= p <= 17");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidParameterError("parameter must be prime");

  FiniteGroup zp = make_abelian({p});
  ChaoReport report;
  report.prime = p;

  const int pair_count = (p - 1) / 2;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pair_count); ++mask) {
    std::vector<int> members;
    for (int j = 0; j < pair_count; ++j) {
      if (!(mask >> j & 1)) continue;
      members.push_back(j + 1);
      members.push_back(p - (j + 1));
    }
    std::sort(members.begin(), members.end());

    ConnectionSet s(zp, members);
    bool edge_transitive = is_edge_transitive(cayley_graph(s));

    // coset test: S * z^-1 closed under multiplication mod p for z in S
    int z = members.front();
    int z_inv = 1;
    for (int i = 0; i < p - 2; ++i) z_inv = z_inv * z % p;
    std::set<int> translated;
    for (int m : members) translated.insert(m * z_inv % p);
    bool coset = true;
    for (int a : translated) {
      for (int b : translated) {
        if (!translated.count(a * b % p)) {
          coset = false;
          break;
        }
      }
      if (!coset) break;
    }

    ++report.instances;
    if (edge_transitive != coset)
      report.disagreements.push_back({members, edge_transitive, coset});
  }
  return report;
}

ConnectionSet example_21_connection_set(const FiniteGroup& group) {
  const auto& params = group.semidirect_params();
  if (params.n != 7 || params.m != 3 || params.t != 2)
    throw InvalidParameterError("expected the order-21 group SD(7,3,2)");
  int a = 0 * params.m + 1; // x^0 a^1
  int x = 1 * params.m + 0; // x^1 a^0
  int ax = group.mul(a, x);
  std::vector<int> members = {a, group.inv(a), x, group.inv(x), ax, group.inv(ax)};
  std::sort(members.begin(), members.end());
  return ConnectionSet(group, members);
}

Example21Report reproduce_example_21() {
  FiniteGroup group = make_semidirect(7, 3, 2);
  ConnectionSet s = example_21_connection_set(group);
  ColoredGraph x = cayley_graph(s);

  Example21Report report;
  report.detail = stability_check(x);
  report.connected = report.detail.connected;
  report.twin_free = report.detail.twin_free;
  report.aut_x_order = report.detail.aut_x_order;
  report.aut_bx_order = report.detail.aut_bx_order;
  report.unstable = !report.detail.stable;

  if (report.detail.witness) {
    // the witness must be a genuine member of Aut BX outside Aut X x S2
    ColoredGraph bx = double_cover(x);
    PermGroup aut_bx = automorphism_group(bx);
    PermGroup obvious(2 * x.vertex_count(),
                      product_subgroup_generators(automorphism_group(x)));
    report.witness_valid = aut_bx.contains(*report.detail.witness) &&
                           !obvious.contains(*report.detail.witness);
  }
  return report;
}

} // namespace caystab
