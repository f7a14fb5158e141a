#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"
#include "jointree/line_graph.hpp"
#include "jointree/rooted_tree.hpp"

namespace jointree {

/// Edge of an equivalent graph: the identity of the line-graph edge it came
/// from, with its current (possibly slid) endpoints.
struct EgEdge {
  EdgeId id;
  RelId a;
  RelId b;
  std::uint32_t weight = 0;

  friend bool operator==(const EgEdge&, const EgEdge&) = default;
};

/// Multigraph over the relations whose spanning trees are in bijection with the
/// maximum spanning trees of the line graph. Parallel edges are allowed; edges
/// that would have become self-loops are listed in `deleted` instead.
class EquivalentGraph {
 public:
  EquivalentGraph() = default;
  EquivalentGraph(std::size_t num_nodes, std::vector<EgEdge> edges, std::vector<EdgeId> deleted);

  /// The line graph itself, every edge in place.
  static EquivalentGraph from_line_graph(const LineGraph& l);

  std::size_t num_nodes() const { return num_nodes_; }
  /// Surviving edges, ascending by id.
  const std::vector<EgEdge>& edges() const { return edges_; }
  /// Non-MST edges, ascending.
  const std::vector<EdgeId>& deleted() const { return deleted_; }

  const EgEdge* find(EdgeId id) const;

  /// Same surviving edges (id and unordered endpoints) and same deleted set.
  friend bool operator==(const EquivalentGraph& x, const EquivalentGraph& y);

 private:
  friend EquivalentGraph slide(EquivalentGraph, EdgeId, EdgeId, bool);

  std::size_t num_nodes_ = 0;
  std::vector<EgEdge> edges_;
  std::vector<EdgeId> deleted_;
};

/// Sliding transformation: e = (v, w) slides along e* = (u, v) and becomes
/// (u, w). Requires w(e) < w(e*), or w(e) <= w(e*) when `allow_equal`. An edge
/// parallel to e* collapses. An edge that becomes a self-loop moves to `deleted`.
/// Throws InputError if the edges share no endpoint or the weight condition
/// fails.
EquivalentGraph slide(EquivalentGraph g, EdgeId e, EdgeId along, bool allow_equal = false);

struct DuplicationRecord {
  VarId original;
  VarId duplicate;
  std::vector<RelId> relations;  // H|x

  friend bool operator==(const DuplicationRecord&, const DuplicationRecord&) = default;
};

struct Duplicated {
  Hypergraph hypergraph;
  DuplicationRecord record;
};

/// Adds a fresh variable x' to every relation containing x.
Duplicated duplicate_vertex(const Hypergraph& h, VarId x);

struct MonotoneTree {
  Hypergraph hypergraph;  // H*, obtained by vertex duplication
  RootedTree tree;        // same parent links, weights under H*
  std::vector<DuplicationRecord> duplications;
};

/// Breadth-first from the root: for each tree edge e with a parent edge p(e),
/// duplicates the smallest variable of chi(e) \ chi(p(e)) until
/// w(e) > w(p(e)). Requires t to be an MCS tree of the alpha-acyclic h.
MonotoneTree build_mwjt(const Hypergraph& h, const RootedTree& t);

/// Equivalent graph from an MCS tree, sliding every non-tree edge straight to
/// its LCA edges (or deleting it when lighter than both). Tree edges stay in
/// place. `weights` is indexed by EdgeId; by default the line graph's own.
/// Throws InvariantViolation if a non-tree edge is heavier than one of its LCA
/// edges (t was not a maximum spanning tree).
EquivalentGraph build_equivalent_graph(const LineGraph& l, const RootedTree& t);
EquivalentGraph build_equivalent_graph(const LineGraph& l, const RootedTree& t,
                                       std::span<const std::uint32_t> weights);

/// Gamma-acyclic variant: no deletion branch, slides decided by the weights of
/// the LCA edges only. `u` may be unweighted (from mcs_tree_gamma); slid edges
/// get the lighter LCA weight.
EquivalentGraph build_equivalent_graph_gamma(const LineGraph& u, const RootedTree& t);

/// Union of all join trees: the line-graph edges that survive in the
/// equivalent graph, in original endpoints. Throws DomainError unless h is
/// alpha-acyclic and connected.
std::vector<LineEdge> union_join_graph(const Hypergraph& h);

/// Diagnostic only: whether every line-graph edge lies in some join tree.
bool line_graph_is_union_join_graph(const Hypergraph& h);

}  // namespace jointree
