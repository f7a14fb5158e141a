#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jointree/hypergraph.hpp"
#include "jointree/oracle.hpp"
#include "jointree/rooted_tree.hpp"

// Differential checks of the fast algorithms against the brute-force oracle,
// as run by the `verify` command.
namespace jointree {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t oracle_max_nodes = kOracleNodeGuard;
  std::size_t plan_sweep_max_nodes = 7;
  /// Join trees enumerated per input; larger inputs are checked on a prefix.
  std::size_t enumeration_limit = 100000;
};

/// True iff no tree edge's shared set is contained in its parent edge's.
bool edges_escape_parents(const RootedTree& t);

/// True iff any two parented tree edges whose labels gain a common variable
/// over their parent edges hang from the same parent.
bool fresh_variables_mark_siblings(const RootedTree& t);

/// True iff every parented tree edge is strictly heavier than its parent edge.
bool has_monotone_weights(const RootedTree& t);

/// Runs every check that applies to h. Checks needing more nodes than the
/// guards allow are reported as skipped.
std::vector<CheckResult> verify_hypergraph(const Hypergraph& h, const VerifyOptions& options = {});

}  // namespace jointree
