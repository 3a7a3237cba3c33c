#pragma once

#include <vector>

#include "caystab/graph.hpp"
#include "caystab/perm.hpp"
#include "caystab/permgroup.hpp"

namespace caystab {

/// True iff p preserves adjacency, edge colors, and loops of g.
bool is_automorphism(const ColoredGraph& g, const Permutation& p);

/// Computes the full automorphism group of a colored graph: all permutations
/// preserving adjacency, edge colors, and (when given) the vertex color
/// classes.
///
/// The search individualizes vertices and re-refines an equitable partition
/// (iterated splitting by multisets of (neighbor class, edge color)),
/// pruning with the orbits of automorphisms found so far and with the
/// refinement trace of the first root-to-leaf path. Every returned generator
/// is verified edge-by-edge before being admitted. Deterministic: target
/// cell is the first smallest non-singleton class, branched in vertex order.
///
/// `vertex_colors`, when non-empty, must have length n; generators then fix
/// each color class setwise.
PermGroup automorphism_group(const ColoredGraph& g,
                             const std::vector<int>& vertex_colors = {});

/// All automorphisms by exhaustive enumeration of the n! candidate
/// permutations. Test oracle; refuses n > 8.
std::vector<Permutation> naive_automorphisms(const ColoredGraph& g);

/// Orbits of the edge set (indices into g.edges()) under the generators of
/// pg, computed by union-find closure. Orbits are sorted by smallest member.
std::vector<std::vector<int>> edge_orbits(const PermGroup& pg,
                                          const ColoredGraph& g);

/// True iff Aut(g) has exactly one orbit of non-loop edges.
bool is_edge_transitive(const ColoredGraph& g);

} // namespace caystab
