#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "jointree/acyclicity.hpp"
#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"
#include "jointree/rooted_tree.hpp"

namespace jointree {

/// Left-deep linear join plan: the relations in join order.
using LeftDeepPlan = std::vector<RelId>;

/// Every relation after the first shares a variable with an earlier one.
bool is_connected_plan(const Hypergraph& h, const LeftDeepPlan& plan);

/// A relation with no earlier relation covering its key
/// r_i ∩ (r_1 ∪ ... ∪ r_{i-1}).
struct Orphan {
  RelId relation;
  std::size_t position = 0;  // 0-based index in the plan
  std::vector<VarId> key;
};

/// Converts a connected left-deep plan into a join tree rooted at plan[0]: the
/// parent of each later relation is the first earlier relation containing its
/// key. Throws InputError if the plan is not a permutation of the relations
/// or is not connected.
std::variant<RootedTree, Orphan> convert_plan(const Hypergraph& h, const LeftDeepPlan& plan);

/// True iff the reversed plan is a GYO reduction order.
bool is_reverse_gyo(const Hypergraph& h, const LeftDeepPlan& plan);

/// Parses "R3,R1,R2" against relation names. Throws InputError on unknown names.
LeftDeepPlan parse_plan(const Hypergraph& h, std::string_view text);

/// Builds a connected plan in which witness.relations[1] is an orphan:
/// r_0, r_2, ..., r_{k-1}, r_1, then the remaining relations in BFS order from
/// that prefix, smallest id first. Returns nullopt if the witness is not a
/// gamma cycle of h or h is disconnected.
std::optional<LeftDeepPlan> orphan_plan_from_cycle(const Hypergraph& h, const CycleWitness& witness);

inline constexpr std::size_t kDefaultPlanSweepBound = 7;

struct PlanSweep {
  std::uint64_t permutations = 0;
  std::uint64_t connected = 0;
  std::uint64_t orphaned = 0;
  /// Successful conversions that failed validate_join_tree.
  std::uint64_t invalid_trees = 0;
  std::optional<LeftDeepPlan> first_orphaned;
};

/// Converts every connected permutation of the relations. Throws GuardExceeded
/// if h has more than `max_n` relations.
PlanSweep sweep_plans(const Hypergraph& h, std::size_t max_n = kDefaultPlanSweepBound);

}  // namespace jointree
