#include "jointree/verify.hpp"

#include <algorithm>
#include <set>

#include "jointree/acyclicity.hpp"
#include "jointree/canonical.hpp"
#include "jointree/enumerate.hpp"
#include "jointree/equivalent_graph.hpp"
#include "jointree/errors.hpp"
#include "jointree/mcs.hpp"
#include "jointree/plan.hpp"

namespace jointree {

namespace {

// chi(e) \ chi(p(e)) for the tree edge above `child`.
std::vector<VarId> fresh_label(const RootedTree& t, RelId child) {
  const auto& link = t.link(child);
  const auto& up = t.link(link->parent);
  std::vector<VarId> out;
  std::set_difference(link->label.begin(), link->label.end(), up->label.begin(), up->label.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<RelId> parented(const RootedTree& t) {
  std::vector<RelId> out;
  for (auto [p, c] : t.edges()) {
    if (t.link(p)) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<EdgeId>> sorted_trees(EditStream& stream, std::size_t limit = SIZE_MAX) {
  auto trees = materialize_join_trees(stream, limit);
  std::sort(trees.begin(), trees.end());
  return trees;
}

CheckResult pass_fail(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, false, ok ? std::string() : std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) { return {std::move(name), true, true, std::move(why)}; }

}  // namespace

bool edges_escape_parents(const RootedTree& t) {
  for (RelId c : parented(t)) {
    if (fresh_label(t, c).empty()) return false;
  }
  return true;
}

bool fresh_variables_mark_siblings(const RootedTree& t) {
  auto kids = parented(t);
  std::vector<std::vector<VarId>> fresh;
  for (RelId c : kids) fresh.push_back(fresh_label(t, c));
  for (std::size_t i = 0; i < kids.size(); ++i) {
    for (std::size_t j = i + 1; j < kids.size(); ++j) {
      std::vector<VarId> common;
      std::set_intersection(fresh[i].begin(), fresh[i].end(), fresh[j].begin(), fresh[j].end(),
                            std::back_inserter(common));
      if (!common.empty() && t.parent(kids[i]) != t.parent(kids[j])) return false;
    }
  }
  return true;
}

bool has_monotone_weights(const RootedTree& t) {
  for (RelId c : parented(t)) {
    if (t.link(c)->weight <= t.link(t.link(c)->parent)->weight) return false;
  }
  return true;
}

std::vector<CheckResult> verify_hypergraph(const Hypergraph& h, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  if (h.empty()) throw InputError("empty hypergraph");
  if (!is_connected(h)) throw DomainError("hypergraph is disconnected; verify one component at a time");

  const bool alpha = is_alpha(h);
  const bool small = h.num_relations() <= options.oracle_max_nodes;
  const auto l = build_line_graph(h);

  std::vector<std::vector<EdgeId>> oracle;
  if (small) {
    try {
      oracle = all_join_trees_bruteforce(h, options.oracle_max_nodes);
      out.push_back(pass_fail("oracle_filters_agree", true));
    } catch (const InvariantViolation& e) {
      out.push_back(pass_fail("oracle_filters_agree", false, e.what()));
    }
    out.push_back(pass_fail("alpha_iff_join_tree_exists", alpha == !oracle.empty(),
                            "GYO verdict disagrees with the brute-force join tree search"));
  } else {
    out.push_back(skipped("oracle_filters_agree", "too many relations for the oracle"));
  }
  if (!alpha) return out;

  // MCS structure from every root.
  bool structure = true;
  bool valid = true;
  for (RelId root : h.relations()) {
    auto t = mcs_tree(h, root);
    valid = valid && validate_join_tree(h, t);
    structure = structure && edges_escape_parents(t) && fresh_variables_mark_siblings(t);
  }
  out.push_back(pass_fail("mcs_trees_are_join_trees", valid, "an MCS tree failed the running intersection check"));
  out.push_back(pass_fail("mcs_edge_structure", structure, "an MCS tree edge is covered by its parent edge or fresh variables span non-siblings"));

  const RelId root = largest_relation(h);
  auto space = prepare_join_tree_space(h, root);
  EditStream stream(space.equivalent_graph, tree_edge_ids(space.line_graph, space.mcs_tree));
  // One tree past the cap tells a truncated enumeration from a complete one.
  const std::size_t cap = options.enumeration_limit;
  auto trees = sorted_trees(stream, cap == SIZE_MAX ? cap : cap + 1);
  const bool complete = trees.size() <= cap;
  if (!complete) trees.resize(cap);
  if (small) {
    out.push_back(pass_fail("enumeration_matches_oracle", trees == oracle,
                            std::to_string(trees.size()) + " enumerated vs " + std::to_string(oracle.size()) + " oracle trees"));
  } else {
    std::set<std::vector<EdgeId>> unique(trees.begin(), trees.end());
    bool ok = unique.size() == trees.size();
    for (const auto& t : trees) ok = ok && validate_join_tree(h, edge_pairs(l, t));
    out.push_back(pass_fail("enumeration_valid_and_distinct", ok, "duplicate or invalid tree enumerated"));
    if (ok && !complete) out.back().detail = "first " + std::to_string(cap) + " trees only";
  }

  auto mw = build_mwjt(h, space.mcs_tree);
  out.push_back(pass_fail("duplication_gives_monotone_weights", has_monotone_weights(mw.tree),
                          "tree weights do not increase away from the root"));
  auto l_star = build_line_graph(mw.hypergraph);
  std::vector<std::uint32_t> w_star(l_star.num_edges());
  for (const auto& e : l_star.edges()) w_star[e.id.index()] = e.weight;
  out.push_back(pass_fail("duplicated_weights_give_same_equivalent_graph",
                          build_equivalent_graph(l, space.mcs_tree, w_star) == space.equivalent_graph,
                          "equivalent graph changed under duplicated weights"));
  if (small) {
    out.push_back(pass_fail("duplication_keeps_join_trees",
                            all_join_trees_bruteforce(mw.hypergraph, options.oracle_max_nodes) == oracle,
                            "join tree set changed by vertex duplication"));
  }

  auto gamma = find_gamma_cycle(h);
  if (gamma.none() && !complete) {
    out.push_back(skipped("gamma_fast_path_matches", "more join trees than the enumeration limit"));
  } else if (gamma.none()) {
    auto fast = prepare_join_tree_space(h, root, true);
    EditStream fast_stream(fast.equivalent_graph, tree_edge_ids(fast.line_graph, fast.mcs_tree));
    out.push_back(pass_fail("gamma_fast_path_matches", sorted_trees(fast_stream) == trees,
                            "gamma fast path enumerates a different join tree set"));
  }

  if (is_berge(h)) {
    bool ok = true;
    for (RelId r : h.relations()) ok = ok && is_canonical(h, canonical_tree(h, r));
    out.push_back(pass_fail("canonical_depths_are_bfs_distances", ok, "an MCS tree is deeper than BFS"));
  }

  if (h.num_relations() <= options.plan_sweep_max_nodes) {
    auto sweep = sweep_plans(h, options.plan_sweep_max_nodes);
    if (gamma.none()) {
      out.push_back(pass_fail("gamma_acyclic_plans_convert", sweep.orphaned == 0 && sweep.invalid_trees == 0,
                              std::to_string(sweep.orphaned) + " orphaned, " +
                                  std::to_string(sweep.invalid_trees) + " invalid"));
    } else if (gamma.found()) {
      auto plan = orphan_plan_from_cycle(h, *gamma.witness);
      bool ok = plan && is_connected_plan(h, *plan) && std::holds_alternative<Orphan>(convert_plan(h, *plan));
      out.push_back(pass_fail("gamma_cycle_yields_orphan_plan", ok && sweep.orphaned > 0,
                              "no orphaned connected plan found"));
    }
  } else {
    out.push_back(skipped("plan_sweep", "too many relations for an exhaustive plan sweep"));
  }
  return out;
}

}  // namespace jointree
