#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jointree/ids.hpp"

namespace jointree {

/// Query hypergraph: one hyperedge per relation, one vertex per variable.
///
/// Immutable after construction. Vertex sets are kept sorted by VarId so that
/// intersections are linear merges. Every vertex occurs in at least one
/// hyperedge and no hyperedge is empty. Two relations may carry identical vertex
/// sets (two distinct relations joined on the same key); the JSON loader merges
/// those, the predicate path keeps them. See merge_duplicate_edges().
class Hypergraph {
 public:
  struct RelationSpec {
    std::string name;
    std::vector<std::string> vars;
  };

  Hypergraph() = default;

  /// Builds from named relations. Variable ids follow first appearance.
  /// Throws InputError on an empty hyperedge or a repeated relation name.
  explicit Hypergraph(const std::vector<RelationSpec>& relations);

  /// Low-level constructor used by algorithms that already work with ids.
  Hypergraph(std::vector<std::string> relation_names, std::vector<std::string> var_names,
             std::vector<std::vector<VarId>> chi);

  std::size_t num_relations() const { return chi_.size(); }
  std::size_t num_vars() const { return var_names_.size(); }
  bool empty() const { return chi_.empty(); }

  /// |H| = sum of hyperedge cardinalities.
  std::size_t size() const;

  std::span<const VarId> chi(RelId r) const { return chi_[r.index()]; }
  /// Hyperedges containing x, ascending by id (the neighbourhood H|x).
  std::span<const RelId> relations_with(VarId x) const { return occurrences_[x.index()]; }

  bool contains(RelId r, VarId x) const;
  std::vector<VarId> intersection(RelId a, RelId b) const;
  std::size_t intersection_size(RelId a, RelId b) const;

  const std::string& name(RelId r) const { return relation_names_[r.index()]; }
  const std::string& var_name(VarId x) const { return var_names_[x.index()]; }
  const std::vector<std::string>& relation_names() const { return relation_names_; }
  const std::vector<std::string>& var_names() const { return var_names_; }

  std::optional<RelId> find_relation(std::string_view name) const;
  std::optional<VarId> find_var(std::string_view name) const;

  std::vector<RelId> relations() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void index_occurrences();

  std::vector<std::string> relation_names_;
  std::vector<std::string> var_names_;
  std::vector<std::vector<VarId>> chi_;
  std::vector<std::vector<RelId>> occurrences_;
};

struct MergeResult {
  Hypergraph hypergraph;
  std::vector<std::string> warnings;
};

/// Collapses relations with identical vertex sets into the first of them.
/// One warning per dropped relation.
MergeResult merge_duplicate_edges(const Hypergraph& h);

/// True when the line graph of h is connected (a single relation counts as connected).
bool is_connected(const Hypergraph& h);

/// Splits h by line-graph connectivity. Relation and variable names are kept;
/// ids are renumbered densely inside each component in original order.
/// Components are ordered by their smallest original relation id.
std::vector<Hypergraph> connected_components(const Hypergraph& h);

/// Default root for tree construction: the relation of largest arity, ties to smallest id.
RelId largest_relation(const Hypergraph& h);

}  // namespace jointree
