#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jointree/equivalent_graph.hpp"
#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"
#include "jointree/line_graph.hpp"
#include "jointree/rooted_tree.hpp"

namespace jointree {

/// One edge swap between consecutive spanning trees.
struct Edit {
  EdgeId add;
  EdgeId remove;

  friend bool operator==(const Edit&, const Edit&) = default;
};

/// Lazy stream of spanning trees of an equivalent graph, reported as edits.
///
/// The first tree is the initial one; every call to next() applies one swap and
/// yields it, until every spanning tree has been visited exactly once. Trees are
/// produced by an include/exclude recursion on the smallest-id edge that is
/// neither forced in (bridge) nor forced out (loop), so the order is fixed by
/// edge ids. Each step costs O(n + m).
///
/// Holds a reference to `eg`, which must outlive the stream. Single consumer.
class EditStream {
 public:
  /// Throws InputError unless `initial` is a spanning tree of `eg`.
  EditStream(const EquivalentGraph& eg, std::span<const EdgeId> initial);

  /// The initial tree, sorted by id.
  const std::vector<EdgeId>& initial() const { return initial_; }

  /// Next swap, or nullopt once the last tree has been reached.
  std::optional<Edit> next();

  /// The tree the stream is currently at, sorted by id.
  std::vector<EdgeId> current() const;

  /// Number of trees reached so far (the initial tree counts).
  std::uint64_t trees_visited() const { return visited_; }

 private:
  enum class Status : std::uint8_t { kFree, kIn, kOut };
  struct Frame {
    std::uint32_t edge;
    bool started_in_tree;
    bool second_branch;
  };

  void descend();
  std::optional<std::uint32_t> pick_branch_edge() const;
  Edit switch_branch(const Frame& f);
  // Marks the side of the current tree containing `from` once `cut` is removed.
  void mark_side(std::uint32_t from, std::uint32_t cut);
  // Tree edges on the path between two nodes.
  std::vector<std::uint32_t> tree_path(std::uint32_t from, std::uint32_t to) const;

  const EquivalentGraph& eg_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj_;  // (node, edge index)
  std::vector<EdgeId> initial_;
  std::vector<Status> status_;
  std::vector<bool> in_tree_;
  std::vector<Frame> stack_;
  std::vector<bool> side_;  // scratch for mark_side
  std::uint64_t visited_ = 1;
  bool done_ = false;
};

/// Everything needed to enumerate the join trees of one connected hypergraph.
struct JoinTreeSpace {
  LineGraph line_graph;
  RootedTree mcs_tree;
  EquivalentGraph equivalent_graph;
};

/// Builds L, the MCS tree rooted at `root` and the equivalent graph. With
/// `gamma_fast_path` the gamma-acyclic construction is used instead (L is then
/// unweighted). The MCS tree's edge ids (tree_edge_ids) start the enumeration.
/// Throws DomainError if h is disconnected or not alpha-acyclic, or has a gamma
/// cycle when the fast path is requested.
JoinTreeSpace prepare_join_tree_space(const Hypergraph& h, RelId root,
                                      bool gamma_fast_path = false);

/// Drains the stream, collecting each tree as a sorted edge-id set. Ids are
/// line-graph ids, so endpoints are the original ones. Stops after `limit`
/// trees.
std::vector<std::vector<EdgeId>> materialize_join_trees(EditStream& stream,
                                                        std::size_t limit = SIZE_MAX);

/// All join trees of a connected alpha-acyclic hypergraph.
std::vector<std::vector<EdgeId>> materialize_join_trees(const Hypergraph& h,
                                                        std::size_t limit = SIZE_MAX);

struct JoinTreeCount {
  std::uint64_t count = 0;
  bool limit_exceeded = false;
};

/// Counts join trees, stopping once more than `limit` have been seen.
JoinTreeCount count_join_trees(const Hypergraph& h, std::uint64_t limit);

/// Relation pairs of an edge-id set.
std::vector<std::pair<RelId, RelId>> edge_pairs(const LineGraph& l, std::span<const EdgeId> ids);

}  // namespace jointree
