#pragma once

#include <optional>

#include "caystab/autgroup.hpp"
#include "caystab/bigint.hpp"
#include "caystab/graph.hpp"

namespace caystab {

/// Direct product: (x1,y1) ~ (x2,y2) iff x1 ~ x2 and y1 ~ y2.
/// Vertex (x, y) is numbered x*|V(Y)| + y. Inputs must be uncolored
/// (loops are fine).
ColoredGraph direct_product(const ColoredGraph& x, const ColoredGraph& y);

/// Cartesian product: adjacent iff equal in one coordinate and adjacent in
/// the other. Same numbering and input restrictions as direct_product.
ColoredGraph cartesian_product(const ColoredGraph& x, const ColoredGraph& y);

/// Canonical bipartite double cover: vertices (v, i) numbered v + i*n, with
/// (v,0) ~ (w,1) iff v ~ w, inheriting the edge color. Colors and loops are
/// allowed; a loop at v becomes the edge (v,0)-(v,1).
ColoredGraph double_cover(const ColoredGraph& x);

/// Whether some automorphism of a connected bipartite graph interchanges the
/// two parts. Decided from the generators of Aut(Y): if every generator
/// preserves the parts, so does the whole group.
bool has_part_swapping_automorphism(const ColoredGraph& y);

struct FactorHypotheses {
  bool twin_free = false;
  bool connected = false;
  bool non_bipartite = false;
};

struct DorflerReport {
  FactorHypotheses x, y;
  bool coprime_orders = false;
  bool applicable = false;
  std::optional<BigInt> aut_x, aut_y, aut_product; // computed when applicable
  bool order_matches = false;

  bool ok() const { return !applicable || order_matches; }
};

/// Hypothesis evaluation plus order check for products of two twin-free,
/// connected, non-bipartite graphs of coprime order: when applicable,
/// |Aut(X x Y)| must equal |Aut X| * |Aut Y|.
DorflerReport dorfler_check(const ColoredGraph& x, const ColoredGraph& y);

/// Which hypothesis route is claimed for the non-bipartite factor X of a
/// bipartite product check.
enum class BipRoute {
  NonBipartiteFactor,  // X non-bipartite: evaluated from the graph
  AbelianCayleyFactor, // X declared a connected Cayley graph on an odd-order
                       // abelian group (not checkable from the graph alone)
};

struct BipProductReport {
  BipRoute route = BipRoute::NonBipartiteFactor;
  bool x_twin_free = false, x_connected = false, x_non_bipartite = false;
  bool x_has_edge = false, x_nontrivial = false;
  bool y_twin_free = false, y_connected = false, y_bipartite = false;
  bool y_has_edge = false, y_nontrivial = false;
  int part0_size = 0, part1_size = 0;
  bool parts_coprime_to_x = false;
  bool parts_unequal = false;
  bool part_swap = false; // computed only when parts are equal-sized
  bool applicable = false;
  std::optional<BigInt> aut_x, aut_y, aut_product;
  bool order_matches = false;

  bool ok() const { return !applicable || order_matches; }
};

/// Product-automorphism check with a bipartite factor Y: evaluates the
/// hypotheses (twin-free/connected factors, Y bipartite with part sizes
/// coprime to |V(X)|, a part swap or unequal parts, nontrivial factors with
/// an edge) and, when all hold, asserts |Aut(X x Y)| = |Aut X| * |Aut Y|.
BipProductReport bip_product_check(const ColoredGraph& x,
                                   const ColoredGraph& y,
                                   BipRoute route = BipRoute::NonBipartiteFactor);

} // namespace caystab
