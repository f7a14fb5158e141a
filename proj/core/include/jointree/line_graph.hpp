#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"
#include "jointree/query.hpp"

namespace jointree {

struct LineEdge {
  EdgeId id;
  RelId a;  // a < b
  RelId b;
  std::uint32_t weight = 0;
  std::vector<VarId> label;  // shared variables, sorted; weight == label.size()

  friend bool operator==(const LineEdge&, const LineEdge&) = default;
};

/// Weighted line graph of a hypergraph. Simple graph; edge ids are dense and
/// ordered lexicographically by (a, b), so any two constructions over the same
/// hypergraph agree on ids.
class LineGraph {
 public:
  LineGraph() = default;
  LineGraph(std::size_t num_nodes, std::vector<LineEdge> edges);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<LineEdge>& edges() const { return edges_; }
  const LineEdge& edge(EdgeId e) const { return edges_[e.index()]; }

  /// (neighbour, edge) pairs, ascending by neighbour.
  std::span<const std::pair<RelId, EdgeId>> neighbors(RelId r) const {
    return adjacency_[r.index()];
  }

  std::optional<EdgeId> find_edge(RelId u, RelId v) const;

  /// |L| = sum of edge weights.
  std::size_t total_weight() const;

  friend bool operator==(const LineGraph& x, const LineGraph& y) { return x.edges_ == y.edges_; }

 private:
  std::vector<LineEdge> edges_;
  std::vector<std::vector<std::pair<RelId, EdgeId>>> adjacency_;
};

/// Builds L(H) with one counting-array pass per relation over the relation
/// multigraph (one parallel edge per shared variable). Linear in the number of
/// (variable, relation pair) incidences.
LineGraph build_line_graph(const Hypergraph& h);

/// Same graph, starting from predicates: the variables are those of build_hypergraph(preds).
LineGraph build_line_graph(const PredicateSet& preds);

}  // namespace jointree
