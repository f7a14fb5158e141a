#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"
#include "jointree/line_graph.hpp"

namespace jointree {

struct ParentLink {
  RelId parent;
  std::uint32_t weight = 0;
  std::vector<VarId> label;  // chi(child) ∩ chi(parent)

  friend bool operator==(const ParentLink&, const ParentLink&) = default;
};

/// Spanning tree over the relations of one connected hypergraph, oriented away
/// from its root. Depths and child lists are derived on construction.
class RootedTree {
 public:
  RootedTree() = default;

  /// Throws InputError unless `links` describe a single tree rooted at `root`
  /// that spans every node.
  RootedTree(RelId root, std::vector<std::optional<ParentLink>> links,
             std::vector<RelId> label_order = {});

  RelId root() const { return root_; }
  std::size_t num_nodes() const { return links_.size(); }

  const std::optional<ParentLink>& link(RelId r) const { return links_[r.index()]; }
  std::optional<RelId> parent(RelId r) const;
  std::uint32_t depth(RelId r) const { return depth_[r.index()]; }
  std::span<const RelId> children(RelId r) const { return children_[r.index()]; }

  /// MCS labelling r_1..r_n when the tree came from MCS; empty otherwise.
  const std::vector<RelId>& label_order() const { return label_order_; }

  /// Root first, then breadth-first with children in ascending id order.
  const std::vector<RelId>& bfs_order() const { return bfs_; }

  /// (parent, child) pairs ordered by child id.
  std::vector<std::pair<RelId, RelId>> edges() const;

  std::uint64_t total_weight() const;

  /// Same root and same parent links; label order is ignored.
  friend bool operator==(const RootedTree& x, const RootedTree& y) {
    return x.root_ == y.root_ && x.links_ == y.links_;
  }

 private:
  RelId root_;
  std::vector<std::optional<ParentLink>> links_;
  std::vector<RelId> label_order_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::vector<RelId>> children_;
  std::vector<RelId> bfs_;
};

/// Builds a rooted tree from a parent array (invalid id for the root), filling
/// weights and labels from h.
RootedTree tree_from_parents(const Hypergraph& h, RelId root, const std::vector<RelId>& parent,
                             std::vector<RelId> label_order = {});

/// Roots an undirected spanning tree given as relation pairs.
RootedTree tree_from_edges(const Hypergraph& h, RelId root,
                           std::span<const std::pair<RelId, RelId>> edges);

/// Line-graph ids of the tree edges, sorted. Throws InputError if a tree edge is
/// not a line-graph edge.
std::vector<EdgeId> tree_edge_ids(const LineGraph& l, const RootedTree& t);

/// True iff `edges` form a spanning tree of L(h) with the running intersection
/// property: for every variable the relations containing it induce a subtree.
bool validate_join_tree(const Hypergraph& h, std::span<const std::pair<RelId, RelId>> edges);
bool validate_join_tree(const Hypergraph& h, const RootedTree& t);

}  // namespace jointree
