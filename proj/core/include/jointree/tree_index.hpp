#pragma once

#include <cstdint>
#include <vector>

#include "jointree/ids.hpp"
#include "jointree/rooted_tree.hpp"

namespace jointree {

/// The one or two tree edges on the tree path between the endpoints of a
/// non-tree edge that touch their lowest common ancestor. Each tree edge is
/// named by its lower endpoint; the upper endpoint is `lca`.
struct LcaEdges {
  RelId lca;
  RelId first;   // on the side of the first query argument
  RelId second;  // on the side of the second; equal to `first` in the ancestor case

  bool single() const { return first == second; }
};

/// Constant-time depth, lowest common ancestor and level ancestor queries over a
/// rooted tree.
///
/// LCA: Euler tour + sparse table over tour depths (O(n log n) build).
/// Level ancestor: ladder decomposition over longest paths plus power-of-two
/// jump pointers; one jump lands on a ladder long enough to finish the walk.
class TreeIndex {
 public:
  explicit TreeIndex(const RootedTree& tree);

  std::size_t num_nodes() const { return depth_.size(); }
  std::uint32_t depth(RelId u) const { return depth_[u.index()]; }
  RelId parent(RelId u) const { return parent_[u.index()]; }  // invalid for the root

  RelId lca(RelId u, RelId v) const;

  /// Ancestor of u at depth d. Throws InputError when d > depth(u).
  RelId level_ancestor(RelId u, std::uint32_t d) const;

  /// LCA edges of the non-tree pair (u, v). Throws InputError when (u, v) is a
  /// tree edge or u == v.
  LcaEdges lca_edges(RelId u, RelId v) const;

 private:
  std::vector<std::uint32_t> depth_;
  std::vector<RelId> parent_;

  // LCA
  std::vector<RelId> euler_;
  std::vector<std::uint32_t> first_;
  std::vector<std::vector<std::uint32_t>> sparse_;  // sparse_[k][i]: tour index of min depth in [i, i + 2^k)

  // Level ancestor
  std::vector<std::vector<RelId>> jump_;  // jump_[k][v]: 2^k-th ancestor (root saturates)
  std::vector<std::vector<RelId>> ladders_;
  std::vector<std::uint32_t> ladder_of_;
  std::vector<std::uint32_t> ladder_pos_;
};

}  // namespace jointree
