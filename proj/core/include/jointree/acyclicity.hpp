#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"

namespace jointree {

/// One step of a GYO reduction: `ear` is removed, covered by `parent`.
struct GyoStep {
  RelId ear;
  std::optional<RelId> parent;  // empty for the last relation

  friend bool operator==(const GyoStep&, const GyoStep&) = default;
};

struct GyoOrder {
  std::vector<GyoStep> steps;
};

/// Relations left when no ear remains.
struct GyoFailure {
  std::vector<RelId> residue;
};

/// GYO reduction on a connected hypergraph. Among candidate ears the smallest
/// relation id is removed first, and its smallest covering relation becomes
/// the parent.
std::variant<GyoOrder, GyoFailure> gyo_reduce(const Hypergraph& h);

/// True iff the sequence is a GYO reduction order: every relation but the last
/// has a later parent containing its intersection with every later relation.
bool is_gyo_order(const Hypergraph& h, const std::vector<GyoStep>& steps);

bool is_alpha(const Hypergraph& h);
/// Every pair of relations shares at most one variable.
bool is_linear(const Hypergraph& h);
/// Alpha-acyclic and linear.
bool is_berge(const Hypergraph& h);

/// Alternating relation/variable cycle (r0, x0, ..., r_{k-1}, x_{k-1});
/// x_i joins r_i to r_{(i+1) mod k}.
struct CycleWitness {
  std::vector<RelId> relations;
  std::vector<VarId> vars;
};

/// The exhaustive searches below give up above this many relations.
inline constexpr std::size_t kDefaultCycleSearchBound = 16;

/// Search result: a witness, a proof of absence, or "gave up" (size bound).
struct CycleSearch {
  enum class Outcome { kFound, kNone, kUnknown };
  Outcome outcome = Outcome::kUnknown;
  std::optional<CycleWitness> witness;

  bool found() const { return outcome == Outcome::kFound; }
  bool none() const { return outcome == Outcome::kNone; }
  bool unknown() const { return outcome == Outcome::kUnknown; }
};

/// Backtracking search for a gamma cycle: k >= 3 distinct relations and
/// variables where x_0..x_{k-2} each occur in no cycle relation other than
/// their two neighbours, and x_{k-1} is only required to join r_{k-1} and r_0.
CycleSearch find_gamma_cycle(const Hypergraph& h, std::size_t bound = kDefaultCycleSearchBound);

/// Backtracking search for a Berge cycle (k >= 2).
CycleSearch find_berge_cycle(const Hypergraph& h, std::size_t bound = kDefaultCycleSearchBound);

bool is_gamma_cycle(const Hypergraph& h, const CycleWitness& w);
bool is_berge_cycle(const Hypergraph& h, const CycleWitness& w);

enum class Tristate { kFalse, kTrue, kUnknown };

struct Classification {
  bool alpha = false;
  bool linear = false;
  bool berge = false;
  Tristate gamma = Tristate::kUnknown;
  std::optional<CycleWitness> gamma_cycle_witness;
  std::optional<CycleWitness> berge_cycle_witness;
};

/// Fills every flag. `berge` comes from alpha && linear, gamma from the cycle
/// search. Throws InvariantViolation if the decided flags break
/// berge => gamma => alpha.
Classification classify(const Hypergraph& h, std::size_t bound = kDefaultCycleSearchBound);

}  // namespace jointree
