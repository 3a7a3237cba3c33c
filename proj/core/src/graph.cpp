#include "caystab/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "caystab/errors.hpp"

namespace caystab {

ColoredGraph::ColoredGraph(int vertex_count, std::vector<ColoredEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ <= 0) throw InvalidParameterError("graph needs at least one vertex");

  std::set<int> colors_seen;
  std::set<std::pair<int, int>> pairs;
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_)
      throw InvalidParameterError("edge endpoint outside vertex range");
    if (e.color < 0) throw InvalidParameterError("edge color must be non-negative");
    if (!pairs.emplace(e.u, e.v).second)
      throw InvalidParameterError("duplicate edge; encode multiplicity in the color");
    colors_seen.insert(e.color);
  }

  // normalize colors to 0..c-1 preserving order
  std::map<int, int> remap;
  for (int c : colors_seen) {
    int id = static_cast<int>(remap.size());
    remap[c] = id;
  }
  color_count_ = static_cast<int>(remap.size());
  for (auto& e : edges_) e.color = remap[e.color];

  std::sort(edges_.begin(), edges_.end());

  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    if (e.u == e.v) {
      ++loop_count_;
      adj_[e.u].emplace_back(e.u, e.color);
    } else {
      adj_[e.u].emplace_back(e.v, e.color);
      adj_[e.v].emplace_back(e.u, e.color);
    }
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<std::pair<int, int>>& ColoredGraph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw InvalidParameterError("vertex outside range");
  return adj_[v];
}

int ColoredGraph::edge_color(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw InvalidParameterError("vertex outside range");
  const auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair<int, int>{v, -1});
  if (it != list.end() && it->first == v) return it->second;
  return -1;
}

bool is_connected(const ColoredGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (auto [w, c] : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

std::optional<Bipartition> bipartition(const ColoredGraph& g) {
  if (g.has_loops()) return std::nullopt;
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0; // component's smallest vertex lands in part 0
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (auto [w, c] : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          frontier.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v)
    (side[v] == 0 ? parts.part0 : parts.part1).push_back(v);
  return parts;
}

std::vector<std::pair<int, int>> twins(const ColoredGraph& g) {
  const int n = g.vertex_count();
  // neighbors(v) already is the (vertex -> color) map, sorted by vertex
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (g.neighbors(v) == g.neighbors(w)) pairs.emplace_back(v, w);
  return pairs;
}

bool is_twin_free(const ColoredGraph& g) { return twins(g).empty(); }

} // namespace caystab
