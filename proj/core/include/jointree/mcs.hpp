#pragma once

#include <cstdint>
#include <vector>

#include "jointree/hypergraph.hpp"
#include "jointree/line_graph.hpp"
#include "jointree/rooted_tree.hpp"

namespace jointree {

/// How Maximum Cardinality Search breaks ties between relations with the same
/// number of marked variables. Default: smallest relation id.
class TieRule {
 public:
  TieRule() = default;

  static TieRule smallest_id() { return TieRule(); }
  /// Earlier in `priority` wins. Must be a permutation of the relations.
  static TieRule permutation(std::vector<RelId> priority);

  /// Rank of r for a hypergraph with n relations; lower rank is picked first.
  std::uint32_t rank(RelId r) const;
  void check(std::size_t n) const;

 private:
  std::vector<std::uint32_t> rank_;  // empty means identity
};

/// Maximum Cardinality Search from `root`. Labels the relation with most marked
/// variables next; every unlabeled relation containing a newly marked variable
/// gets the current relation as its (tentative) parent, later labels
/// overwriting earlier ones.
///
/// On an alpha-acyclic hypergraph the result is a join tree. On a cyclic one it
/// is still a spanning tree of the line graph but fails the running
/// intersection property; use validate_join_tree() to tell.
///
/// Throws InputError if root is not a relation of h or h is disconnected.
RootedTree mcs_tree(const Hypergraph& h, RelId root, const TieRule& tie = {});

/// Parent array after each labelling step, for inspecting the search.
struct McsStep {
  RelId labeled;
  std::vector<RelId> parent;  // invalid id = no parent yet
};
std::vector<McsStep> mcs_trace(const Hypergraph& h, RelId root, const TieRule& tie = {});

struct McsGammaResult {
  RootedTree tree;
  /// Every pair of relations meeting in a variable, discovered while marking.
  /// Unweighted: edge weights are 0 and labels empty. For a gamma-acyclic input
  /// this is the union join graph.
  LineGraph line_graph;
};

/// MCS that also emits the line graph's edge set, in O(|H| + |E(L)|).
/// Intended for gamma-acyclic inputs; on others the output is still well
/// formed but carries no guarantee.
McsGammaResult mcs_tree_gamma(const Hypergraph& h, RelId root, const TieRule& tie = {});

}  // namespace jointree
