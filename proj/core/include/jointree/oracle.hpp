#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jointree/equivalent_graph.hpp"
#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"
#include "jointree/line_graph.hpp"

// Brute-force references for tests and the `verify` command. Everything here
// is exponential and guarded by size limits.
namespace jointree {

inline constexpr std::size_t kOracleNodeGuard = 10;

/// Every spanning tree of a multigraph, as sorted edge-index lists. Edges are
/// (a, b) pairs; parallel edges count as distinct. Throws GuardExceeded for
/// more than `max_nodes` nodes.
std::vector<std::vector<std::uint32_t>> all_spanning_trees(
    std::size_t num_nodes, std::span<const std::pair<RelId, RelId>> edges,
    std::size_t max_nodes = kOracleNodeGuard);

/// Spanning trees as sorted edge-id sets.
std::vector<std::vector<EdgeId>> all_spanning_trees(const LineGraph& l,
                                                    std::size_t max_nodes = kOracleNodeGuard);
std::vector<std::vector<EdgeId>> all_spanning_trees(const EquivalentGraph& g,
                                                    std::size_t max_nodes = kOracleNodeGuard);

struct OracleJoinTrees {
  std::vector<std::vector<EdgeId>> running_intersection;  // spanning trees of L with RIP
  std::vector<std::vector<EdgeId>> max_weight;            // maximum-weight spanning trees of L
};

/// Both filters over all spanning trees of L(h), each list sorted.
OracleJoinTrees oracle_join_trees(const Hypergraph& h, std::size_t max_nodes = kOracleNodeGuard);

/// Join trees by the running-intersection filter. Throws InvariantViolation if
/// join trees exist and the max-weight filter disagrees.
std::vector<std::vector<EdgeId>> all_join_trees_bruteforce(const Hypergraph& h,
                                                           std::size_t max_nodes = kOracleNodeGuard);

bool has_join_tree(const Hypergraph& h, std::size_t max_nodes = kOracleNodeGuard);

enum class AcyclicClass { kAlpha, kBerge, kGamma };

struct RandomBounds {
  std::size_t min_relations = 1;
  std::size_t max_relations = 8;
  std::size_t max_vars = 12;
  std::size_t max_shared = 3;  // per tree edge, alpha class only
};

/// Seeded random connected hypergraph of the requested class. Grows a random
/// tree over the relations and instantiates shared variables along its edges,
/// then checks the class and resamples on failure. Relations are named R1..Rn
/// and variables v1..vm. Same seed and bounds give the same hypergraph.
Hypergraph random_acyclic_hypergraph(std::uint64_t seed, AcyclicClass cls,
                                     const RandomBounds& bounds = {});

}  // namespace jointree
