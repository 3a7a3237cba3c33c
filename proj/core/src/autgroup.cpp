#include "caystab/autgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "caystab/errors.hpp"

namespace caystab {

bool is_automorphism(const ColoredGraph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (const auto& e : g.edges()) {
    int iu = p(e.u), iv = p(e.v);
    if (g.edge_color(iu, iv) != e.color) return false;
  }
  return true;
}

namespace {

// Ordered partition of the vertex set; cell order is significant and all
// choices below depend only on the partition structure, never on vertex
// numbering, so the search tree is invariant under relabeling.
struct OrderedPartition {
  std::vector<int> elems;   // vertices, grouped by cell
  std::vector<int> cell_of; // vertex -> cell index
  std::vector<int> start;   // cell -> offset into elems
  std::vector<int> size;    // cell -> cell size

  static OrderedPartition unit(int n, const std::vector<int>& vertex_colors) {
    OrderedPartition p;
    p.elems.resize(n);
    std::iota(p.elems.begin(), p.elems.end(), 0);
    if (!vertex_colors.empty()) {
      std::stable_sort(p.elems.begin(), p.elems.end(), [&](int a, int b) {
        return vertex_colors[a] < vertex_colors[b];
      });
    }
    p.cell_of.assign(n, 0);
    int cell = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || (!vertex_colors.empty() &&
                     vertex_colors[p.elems[i]] != vertex_colors[p.elems[i - 1]])) {
        ++cell;
        p.start.push_back(i);
        p.size.push_back(0);
      }
      p.cell_of[p.elems[i]] = cell;
      ++p.size[cell];
    }
    return p;
  }

  int cell_count() const { return static_cast<int>(start.size()); }
  bool discrete() const { return cell_count() == static_cast<int>(elems.size()); }
};

using Signature = std::vector<std::pair<int, int>>; // sorted (cell, edge color)

Signature signature_of(const ColoredGraph& g, const OrderedPartition& p, int v) {
  Signature sig;
  sig.reserve(g.neighbors(v).size());
  for (auto [w, c] : g.neighbors(v)) sig.emplace_back(p.cell_of[w], c);
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Splits every cell by vertex signature until no cell splits. New cells keep
// the position of their parent, ordered among themselves by signature.
void refine(const ColoredGraph& g, OrderedPartition& p) {
  const int n = static_cast<int>(p.elems.size());
  for (;;) {
    std::vector<Signature> sigs(n);
    for (int v = 0; v < n; ++v) sigs[v] = signature_of(g, p, v);

    OrderedPartition next;
    next.elems = p.elems;
    std::stable_sort(next.elems.begin(), next.elems.end(), [&](int a, int b) {
      if (p.cell_of[a] != p.cell_of[b]) return p.cell_of[a] < p.cell_of[b];
      return sigs[a] < sigs[b];
    });
    next.cell_of.assign(n, 0);
    int cell = -1;
    for (int i = 0; i < n; ++i) {
      int v = next.elems[i];
      if (i == 0 || p.cell_of[v] != p.cell_of[next.elems[i - 1]] ||
          sigs[v] != sigs[next.elems[i - 1]]) {
        ++cell;
        next.start.push_back(i);
        next.size.push_back(0);
      }
      next.cell_of[v] = cell;
      ++next.size[cell];
    }
    if (next.cell_count() == p.cell_count()) return;
    p = std::move(next);
  }
}

OrderedPartition individualize(const OrderedPartition& p, int v) {
  OrderedPartition next;
  const int n = static_cast<int>(p.elems.size());
  next.elems.reserve(n);
  next.cell_of.assign(n, 0);
  int cell = -1;
  for (int c = 0; c < p.cell_count(); ++c) {
    if (c == p.cell_of[v]) {
      ++cell;
      next.start.push_back(static_cast<int>(next.elems.size()));
      next.size.push_back(1);
      next.elems.push_back(v);
      next.cell_of[v] = cell;
      if (p.size[c] > 1) {
        ++cell;
        next.start.push_back(static_cast<int>(next.elems.size()));
        next.size.push_back(p.size[c] - 1);
        for (int i = p.start[c]; i < p.start[c] + p.size[c]; ++i)
          if (p.elems[i] != v) {
            next.elems.push_back(p.elems[i]);
            next.cell_of[p.elems[i]] = cell;
          }
      }
    } else {
      ++cell;
      next.start.push_back(static_cast<int>(next.elems.size()));
      next.size.push_back(p.size[c]);
      for (int i = p.start[c]; i < p.start[c] + p.size[c]; ++i) {
        next.elems.push_back(p.elems[i]);
        next.cell_of[p.elems[i]] = cell;
      }
    }
  }
  return next;
}

// Label-invariant summary of a refined partition: per cell, its size and the
// common signature of its members.
using NodeInvariant = std::vector<std::pair<int, Signature>>;

NodeInvariant invariant_of(const ColoredGraph& g, const OrderedPartition& p) {
  NodeInvariant inv;
  inv.reserve(p.cell_count());
  for (int c = 0; c < p.cell_count(); ++c)
    inv.emplace_back(p.size[c], signature_of(g, p, p.elems[p.start[c]]));
  return inv;
}

// first smallest non-singleton cell, or -1 when discrete
int target_cell(const OrderedPartition& p) {
  int best = -1;
  for (int c = 0; c < p.cell_count(); ++c) {
    if (p.size[c] < 2) continue;
    if (best < 0 || p.size[c] < p.size[best]) best = c;
  }
  return best;
}

class AutomorphismSearch {
public:
  AutomorphismSearch(const ColoredGraph& g, const std::vector<int>& vertex_colors)
      : graph_(g), n_(g.vertex_count()) {
    OrderedPartition root = OrderedPartition::unit(n_, vertex_colors);
    refine(graph_, root);
    explore(root, 0);
  }

  std::vector<Permutation> take_generators() { return std::move(generators_); }

private:
  void explore(const OrderedPartition& p, int depth) {
    NodeInvariant inv = invariant_of(graph_, p);
    if (!have_first_leaf_) {
      first_path_invariants_.push_back(std::move(inv));
    } else if (inv != first_path_invariants_[depth]) {
      return; // no automorphism can map the first path here
    }

    if (p.discrete()) {
      if (!have_first_leaf_) {
        first_leaf_ = p.elems;
        have_first_leaf_ = true;
        return;
      }
      // candidate mapping: i-th vertex of the first leaf -> i-th vertex here
      std::vector<int> images(n_);
      for (int i = 0; i < n_; ++i) images[first_leaf_[i]] = p.elems[i];
      Permutation candidate(std::move(images));
      if (is_automorphism(graph_, candidate))
        generators_.push_back(std::move(candidate));
      return;
    }

    const int cell = target_cell(p);
    std::vector<int> candidates(p.elems.begin() + p.start[cell],
                                p.elems.begin() + p.start[cell] + p.size[cell]);
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> tried;
    for (int v : candidates) {
      if (in_orbit_of_tried(v, tried)) continue;
      tried.push_back(v);
      prefix_.push_back(v);
      OrderedPartition child = individualize(p, v);
      refine(graph_, child);
      explore(child, depth + 1);
      prefix_.pop_back();
    }
  }

  // Orbit pruning: v is skipped when a generator-product that fixes the
  // current prefix pointwise maps an already-tried candidate to v.
  bool in_orbit_of_tried(int v, const std::vector<int>& tried) {
    if (tried.empty() || generators_.empty()) return false;
    rebuild_orbits();
    for (int u : tried)
      if (find_root(u) == find_root(v)) return true;
    return false;
  }

  void rebuild_orbits() {
    orbit_parent_.resize(n_);
    std::iota(orbit_parent_.begin(), orbit_parent_.end(), 0);
    for (const auto& gen : generators_) {
      bool fixes_prefix = true;
      for (int u : prefix_) {
        if (gen(u) != u) {
          fixes_prefix = false;
          break;
        }
      }
      if (!fixes_prefix) continue;
      for (int v = 0; v < n_; ++v) unite(v, gen(v));
    }
  }

  int find_root(int v) {
    while (orbit_parent_[v] != v) {
      orbit_parent_[v] = orbit_parent_[orbit_parent_[v]];
      v = orbit_parent_[v];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find_root(a);
    b = find_root(b);
    if (a != b) orbit_parent_[std::max(a, b)] = std::min(a, b);
  }

  const ColoredGraph& graph_;
  int n_;
  std::vector<Permutation> generators_;
  std::vector<NodeInvariant> first_path_invariants_;
  std::vector<int> first_leaf_;
  bool have_first_leaf_ = false;
  std::vector<int> prefix_;
  std::vector<int> orbit_parent_;
};

} // namespace

PermGroup automorphism_group(const ColoredGraph& g,
                             const std::vector<int>& vertex_colors) {
  if (!vertex_colors.empty() &&
      static_cast<int>(vertex_colors.size()) != g.vertex_count())
    throw InvalidParameterError("vertex color array length mismatch");

  AutomorphismSearch search(g, vertex_colors);
  auto generators = search.take_generators();

  if (!vertex_colors.empty())
    for (const auto& gen : generators)
      for (int v = 0; v < g.vertex_count(); ++v)
        if (vertex_colors[gen(v)] != vertex_colors[v])
          throw Error("internal: generator violates vertex color classes");

  return PermGroup(g.vertex_count(), std::move(generators));
}

std::vector<Permutation> naive_automorphisms(const ColoredGraph& g) {
  const int n = g.vertex_count();
  if (n > 8)
    throw PreconditionError("naive enumeration is restricted to n <= 8");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    Permutation p(images);
    if (is_automorphism(g, p)) result.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::vector<std::vector<int>> edge_orbits(const PermGroup& pg,
                                          const ColoredGraph& g) {
  if (pg.degree() != g.vertex_count())
    throw InvalidParameterError("group degree does not match graph");
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());

  std::map<std::pair<int, int>, int> index_of;
  for (int i = 0; i < m; ++i) index_of[{edges[i].u, edges[i].v}] = i;

  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find_root = [&](int e) {
    while (parent[e] != e) {
      parent[e] = parent[parent[e]];
      e = parent[e];
    }
    return e;
  };

  for (const auto& gen : pg.generators()) {
    for (int i = 0; i < m; ++i) {
      int u = gen(edges[i].u), v = gen(edges[i].v);
      if (u > v) std::swap(u, v);
      auto it = index_of.find({u, v});
      if (it == index_of.end())
        throw InvalidParameterError("generator does not preserve the edge set");
      int a = find_root(i), b = find_root(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<int, std::vector<int>> grouped;
  for (int i = 0; i < m; ++i) grouped[find_root(i)].push_back(i);
  std::vector<std::vector<int>> orbits;
  orbits.reserve(grouped.size());
  for (auto& [root, members] : grouped) orbits.push_back(std::move(members));
  return orbits;
}

bool is_edge_transitive(const ColoredGraph& g) {
  PermGroup aut = automorphism_group(g);
  auto orbits = edge_orbits(aut, g);
  int non_loop_orbits = 0;
  for (const auto& orbit : orbits) {
    const auto& e = g.edges()[orbit.front()];
    if (e.u != e.v) ++non_loop_orbits;
  }
  return non_loop_orbits == 1;
}

} // namespace caystab
