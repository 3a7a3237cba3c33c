#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace caystab {

struct ColoredEdge {
  int u, v;  // u <= v after normalization; u == v is a loop
  int color; // 0-based after normalization

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Undirected graph with optional loops and integer edge colors.
///
/// Vertex identity is positional (0-based). At most one edge per vertex pair;
/// edge multiplicity, when needed, is encoded in the color. Colors are
/// normalized to 0..c-1 preserving their relative order. Immutable after
/// construction.
class ColoredGraph {
public:
  /// Edges may arrive in any order with any non-negative colors; duplicate
  /// (u, v) pairs are rejected.
  ColoredGraph(int vertex_count, std::vector<ColoredEdge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int color_count() const { return color_count_; }
  bool has_loops() const { return loop_count_ > 0; }
  int loop_count() const { return loop_count_; }

  /// True when the graph is loopless and single-colored.
  bool is_simple() const { return loop_count_ == 0 && color_count_ <= 1; }

  const std::vector<ColoredEdge>& edges() const { return edges_; }

  /// Neighbors of v as (neighbor, color), sorted by neighbor. A loop at v
  /// contributes the entry (v, color).
  const std::vector<std::pair<int, int>>& neighbors(int v) const;

  /// Color of the edge {u, v}, or -1 if not adjacent.
  int edge_color(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_color(u, v) >= 0; }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  int color_count_ = 0;
  int loop_count_ = 0;
  std::vector<ColoredEdge> edges_; // sorted, normalized
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

bool is_connected(const ColoredGraph& g);

struct Bipartition {
  std::vector<int> part0, part1; // sorted
};

/// A valid bipartition if one exists (loops force failure). For a connected
/// graph the result is canonical: part0 contains vertex 0. For a disconnected
/// graph, each component's smallest vertex lands in part0.
std::optional<Bipartition> bipartition(const ColoredGraph& g);

/// All unordered pairs v < w whose colored neighborhoods are identical as
/// (vertex -> color) maps; a loop at v contributes the entry v -> color.
/// The underlying relation is an equivalence; the graph is twin-free iff the
/// list is empty.
std::vector<std::pair<int, int>> twins(const ColoredGraph& g);

bool is_twin_free(const ColoredGraph& g);

} // namespace caystab
