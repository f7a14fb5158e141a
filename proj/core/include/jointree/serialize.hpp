#pragma once

#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "jointree/acyclicity.hpp"
#include "jointree/enumerate.hpp"
#include "jointree/equivalent_graph.hpp"
#include "jointree/hypergraph.hpp"
#include "jointree/line_graph.hpp"
#include "jointree/rooted_tree.hpp"

namespace jointree {

using Json = nlohmann::ordered_json;

/// "e<index>".
std::string edge_name(EdgeId e);
/// Inverse of edge_name. Throws InputError on anything else.
EdgeId parse_edge_name(std::string_view text);

/// {"relations": {"R1": ["a", "b"], ...}}, the loader's input format.
Json hypergraph_to_json(const Hypergraph& h);

/// Flags plus the witnesses found: {"alpha", "linear", "berge", "gamma",
/// "gamma_cycle"?, "berge_cycle"?}. gamma is true, false or "unknown".
Json classification_to_json(const Hypergraph& h, const Classification& c);

/// {"root", "weight", "edges": [{"id"?, "parent", "child", "weight", "shared"}]}.
/// Edge ids are included when `l` is given.
Json tree_to_json(const Hypergraph& h, const RootedTree& t, const LineGraph* l = nullptr);

/// Reads the output of tree_to_json back against h. Only "root" and the
/// parent/child names are used; weights are recomputed.
/// Throws InputError on unknown names or a shape that is not a spanning tree.
RootedTree tree_from_json(const Hypergraph& h, const Json& doc);

/// {"edges": [{"id", "a", "b", "weight", "original": [a, b]}], "deleted": [ids]}.
Json equivalent_graph_to_json(const Hypergraph& h, const LineGraph& l, const EquivalentGraph& g);

/// Undirected DOT graph; edges labelled with their shared variables.
std::string tree_to_dot(const Hypergraph& h, const RootedTree& t, std::string_view name = "join_tree");

/// Undirected DOT multigraph of the surviving edges; each edge labelled with
/// its id and the shared variables of its original endpoints.
std::string equivalent_graph_to_dot(const Hypergraph& h, const LineGraph& l, const EquivalentGraph& g,
                                    std::string_view name = "equivalent_graph");

/// "TREE e1 e4 e7".
std::string format_tree_line(std::span<const EdgeId> ids);
/// "SWAP +e2 -e5".
std::string format_edit_line(const Edit& edit);
/// "e1 e4 e7".
std::string format_edge_list(std::span<const EdgeId> ids);

}  // namespace jointree
