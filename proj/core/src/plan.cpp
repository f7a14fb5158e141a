#include "jointree/plan.hpp"

#include <algorithm>
#include <string>

#include "jointree/errors.hpp"

namespace jointree {

namespace {

void check_permutation(const Hypergraph& h, const LeftDeepPlan& plan) {
  if (plan.size() != h.num_relations()) throw InputError("plan must list every relation exactly once");
  std::vector<bool> seen(h.num_relations(), false);
  for (RelId r : plan) {
    if (r.index() >= h.num_relations() || seen[r.index()]) {
      throw InputError("plan must list every relation exactly once");
    }
    seen[r.index()] = true;
  }
}

bool covers(const Hypergraph& h, RelId r, const std::vector<VarId>& key) {
  return std::all_of(key.begin(), key.end(), [&](VarId x) { return h.contains(r, x); });
}

}  // namespace

bool is_connected_plan(const Hypergraph& h, const LeftDeepPlan& plan) {
  std::vector<bool> seen_var(h.num_vars(), false);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    auto chi = h.chi(plan[i]);
    if (i > 0 && std::none_of(chi.begin(), chi.end(), [&](VarId x) { return seen_var[x.index()]; })) {
      return false;
    }
    for (VarId x : chi) seen_var[x.index()] = true;
  }
  return true;
}

std::variant<RootedTree, Orphan> convert_plan(const Hypergraph& h, const LeftDeepPlan& plan) {
  check_permutation(h, plan);
  if (!is_connected_plan(h, plan)) throw InputError("plan is not connected");
  if (plan.empty()) throw InputError("empty plan");

  std::vector<bool> seen_var(h.num_vars(), false);
  std::vector<RelId> parent(h.num_relations(), RelId::invalid());
  for (VarId x : h.chi(plan[0])) seen_var[x.index()] = true;
  std::vector<VarId> key;
  for (std::size_t i = 1; i < plan.size(); ++i) {
    key.clear();
    for (VarId x : h.chi(plan[i])) {
      if (seen_var[x.index()]) key.push_back(x);
    }
    auto it = std::find_if(plan.begin(), plan.begin() + static_cast<std::ptrdiff_t>(i),
                           [&](RelId r) { return covers(h, r, key); });
    if (it == plan.begin() + static_cast<std::ptrdiff_t>(i)) return Orphan{plan[i], i, key};
    parent[plan[i].index()] = *it;
    for (VarId x : h.chi(plan[i])) seen_var[x.index()] = true;
  }
  return tree_from_parents(h, plan[0], parent);
}

bool is_reverse_gyo(const Hypergraph& h, const LeftDeepPlan& plan) {
  check_permutation(h, plan);
  if (!is_connected_plan(h, plan)) return false;
  auto converted = convert_plan(h, plan);
  if (std::holds_alternative<Orphan>(converted)) return false;
  const auto& tree = std::get<RootedTree>(converted);
  std::vector<GyoStep> steps;
  for (auto it = plan.rbegin(); it != plan.rend(); ++it) steps.push_back({*it, tree.parent(*it)});
  return is_gyo_order(h, steps);
}

LeftDeepPlan parse_plan(const Hypergraph& h, std::string_view text) {
  LeftDeepPlan plan;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto name = text.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    auto r = h.find_relation(name);
    if (!r) throw InputError("unknown relation in plan: '" + std::string(name) + "'");
    plan.push_back(*r);
    start = end + 1;
  }
  return plan;
}

std::optional<LeftDeepPlan> orphan_plan_from_cycle(const Hypergraph& h, const CycleWitness& witness) {
  if (!is_gamma_cycle(h, witness) || !is_connected(h)) return std::nullopt;
  const auto& cyc = witness.relations;
  LeftDeepPlan plan{cyc[0]};
  for (std::size_t i = 2; i < cyc.size(); ++i) plan.push_back(cyc[i]);
  plan.push_back(cyc[1]);

  std::vector<bool> placed(h.num_relations(), false);
  std::vector<bool> reached_var(h.num_vars(), false);
  for (RelId r : plan) {
    placed[r.index()] = true;
    for (VarId x : h.chi(r)) reached_var[x.index()] = true;
  }
  // Grow by the smallest relation touching what is placed so far.
  while (plan.size() < h.num_relations()) {
    std::optional<RelId> next;
    for (RelId r : h.relations()) {
      if (placed[r.index()]) continue;
      auto chi = h.chi(r);
      if (std::any_of(chi.begin(), chi.end(), [&](VarId x) { return reached_var[x.index()]; })) {
        next = r;
        break;
      }
    }
    if (!next) return std::nullopt;
    placed[next->index()] = true;
    for (VarId x : h.chi(*next)) reached_var[x.index()] = true;
    plan.push_back(*next);
  }
  return plan;
}

PlanSweep sweep_plans(const Hypergraph& h, std::size_t max_n) {
  if (h.num_relations() > max_n) {
    throw GuardExceeded("plan sweep limited to " + std::to_string(max_n) + " relations");
  }
  PlanSweep out;
  LeftDeepPlan plan = h.relations();
  if (plan.empty()) return out;
  do {
    ++out.permutations;
    if (!is_connected_plan(h, plan)) continue;
    ++out.connected;
    auto converted = convert_plan(h, plan);
    if (std::holds_alternative<Orphan>(converted)) {
      ++out.orphaned;
      if (!out.first_orphaned) out.first_orphaned = plan;
    } else if (!validate_join_tree(h, std::get<RootedTree>(converted))) {
      ++out.invalid_trees;
    }
  } while (std::next_permutation(plan.begin(), plan.end()));
  return out;
}

}  // namespace jointree
