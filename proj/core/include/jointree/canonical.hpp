#pragma once

#include <cstdint>
#include <vector>

#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"
#include "jointree/line_graph.hpp"
#include "jointree/rooted_tree.hpp"

namespace jointree {

/// The shallowest join tree rooted at `root`: every relation sits at its BFS
/// distance from the root in the line graph. For a Berge-acyclic hypergraph it
/// is unique and MCS returns it under any tie rule.
/// Throws DomainError unless h is Berge-acyclic.
RootedTree canonical_tree(const Hypergraph& h, RelId root);

/// BFS distances from `root` in l; unreachable nodes get UINT32_MAX.
std::vector<std::uint32_t> bfs_distances(const LineGraph& l, RelId root);

/// True iff every node's depth in t equals its BFS distance from t's root in L(h).
bool is_canonical(const Hypergraph& h, const RootedTree& t);

/// True iff every pair of nodes is joined by exactly one shortest path.
bool geodetic_check(const LineGraph& l);

}  // namespace jointree
