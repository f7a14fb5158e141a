#include "jointree/acyclicity.hpp"

#include <algorithm>

#include "jointree/errors.hpp"
#include "jointree/line_graph.hpp"

namespace jointree {

std::variant<GyoOrder, GyoFailure> gyo_reduce(const Hypergraph& h) {
  const std::size_t n = h.num_relations();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> live_count(h.num_vars(), 0);
  for (std::size_t x = 0; x < h.num_vars(); ++x) live_count[x] = h.relations_with(VarId(x)).size();

  GyoOrder order;
  std::size_t remaining = n;
  std::vector<VarId> shared;
  while (remaining > 1) {
    bool removed = false;
    for (std::size_t r = 0; r < n && !removed; ++r) {
      if (!alive[r]) continue;
      shared.clear();
      for (VarId x : h.chi(RelId(r))) {
        if (live_count[x.index()] >= 2) shared.push_back(x);
      }
      for (std::size_t q = 0; q < n; ++q) {
        if (q == r || !alive[q]) continue;
        bool covers = std::all_of(shared.begin(), shared.end(),
                                  [&](VarId x) { return h.contains(RelId(q), x); });
        if (!covers) continue;
        order.steps.push_back({RelId(r), RelId(q)});
        alive[r] = false;
        for (VarId x : h.chi(RelId(r))) --live_count[x.index()];
        --remaining;
        removed = true;
        break;
      }
    }
    if (!removed) {
      GyoFailure fail;
      for (std::size_t r = 0; r < n; ++r) {
        if (alive[r]) fail.residue.emplace_back(r);
      }
      return fail;
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (alive[r]) order.steps.push_back({RelId(r), std::nullopt});
  }
  return order;
}

bool is_gyo_order(const Hypergraph& h, const std::vector<GyoStep>& steps) {
  const std::size_t k = steps.size();
  if (k != h.num_relations()) return false;
  std::vector<std::size_t> pos(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto r = steps[i].ear.index();
    if (r >= k || pos[r] != k) return false;
    pos[r] = i;
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto& s = steps[i];
    if (!s.parent || s.parent->index() >= k || pos[s.parent->index()] <= i) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      for (VarId x : h.intersection(s.ear, steps[j].ear)) {
        if (!h.contains(*s.parent, x)) return false;
      }
    }
  }
  return k == 0 || !steps.back().parent;
}

bool is_alpha(const Hypergraph& h) { return std::holds_alternative<GyoOrder>(gyo_reduce(h)); }

bool is_linear(const Hypergraph& h) {
  auto l = build_line_graph(h);
  return std::all_of(l.edges().begin(), l.edges().end(),
                     [](const LineEdge& e) { return e.weight <= 1; });
}

bool is_berge(const Hypergraph& h) { return is_linear(h) && is_alpha(h); }

namespace {

class CycleSearcher {
 public:
  CycleSearcher(const Hypergraph& h, bool gamma)
      : h_(h),
        gamma_(gamma),
        in_cycle_(h.num_relations(), false),
        cover_(h.num_vars(), 0),
        used_var_(h.num_vars(), false) {}

  std::optional<CycleWitness> run() {
    for (RelId r0 : h_.relations()) {
      push_relation(r0);
      if (extend()) return CycleWitness{rels_, vars_};
      pop_relation();
    }
    return std::nullopt;
  }

 private:
  void push_relation(RelId r) {
    rels_.push_back(r);
    in_cycle_[r.index()] = true;
    for (VarId x : h_.chi(r)) ++cover_[x.index()];
  }

  void pop_relation() {
    RelId r = rels_.back();
    rels_.pop_back();
    in_cycle_[r.index()] = false;
    for (VarId x : h_.chi(r)) --cover_[x.index()];
  }

  bool try_close() {
    const std::size_t min_len = gamma_ ? 3 : 2;
    if (rels_.size() < min_len) return false;
    RelId last = rels_.back();
    for (VarId x : h_.chi(last)) {
      if (used_var_[x.index()] || !h_.contains(rels_.front(), x)) continue;
      vars_.push_back(x);
      return true;
    }
    return false;
  }

  bool extend() {
    if (try_close()) return true;
    RelId last = rels_.back();
    for (VarId x : h_.chi(last)) {
      if (used_var_[x.index()]) continue;
      // Gamma: x_t must not occur in any earlier cycle relation.
      if (gamma_ && cover_[x.index()] != 1) continue;
      for (RelId r : h_.relations_with(x)) {
        if (in_cycle_[r.index()]) continue;
        if (!gamma_ && r < rels_.front()) continue;  // rotate the smallest relation to the front
        if (gamma_ && contains_earlier_var(r)) continue;
        used_var_[x.index()] = true;
        vars_.push_back(x);
        push_relation(r);
        if (extend()) return true;
        pop_relation();
        vars_.pop_back();
        used_var_[x.index()] = false;
      }
    }
    return false;
  }

  // True if r contains one of x_0..x_{t-1} (x_t is not pushed yet).
  bool contains_earlier_var(RelId r) const {
    for (VarId x : vars_) {
      if (h_.contains(r, x)) return true;
    }
    return false;
  }

  const Hypergraph& h_;
  bool gamma_;
  std::vector<bool> in_cycle_;
  std::vector<std::uint32_t> cover_;
  std::vector<bool> used_var_;
  std::vector<RelId> rels_;
  std::vector<VarId> vars_;
};

CycleSearch search(const Hypergraph& h, std::size_t bound, bool gamma) {
  CycleSearch out;
  if (h.num_relations() > bound) return out;
  auto w = CycleSearcher(h, gamma).run();
  out.outcome = w ? CycleSearch::Outcome::kFound : CycleSearch::Outcome::kNone;
  out.witness = std::move(w);
  return out;
}

bool distinct_cycle_shape(const Hypergraph& h, const CycleWitness& w, std::size_t min_len) {
  const std::size_t k = w.relations.size();
  if (k < min_len || w.vars.size() != k) return false;
  auto rels = w.relations;
  auto vars = w.vars;
  std::sort(rels.begin(), rels.end());
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(rels.begin(), rels.end()) != rels.end()) return false;
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) return false;
  if (!rels.empty() && rels.back().index() >= h.num_relations()) return false;
  if (!vars.empty() && vars.back().index() >= h.num_vars()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!h.contains(w.relations[i], w.vars[i]) || !h.contains(w.relations[(i + 1) % k], w.vars[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace

CycleSearch find_gamma_cycle(const Hypergraph& h, std::size_t bound) {
  return search(h, bound, true);
}

CycleSearch find_berge_cycle(const Hypergraph& h, std::size_t bound) {
  return search(h, bound, false);
}

bool is_berge_cycle(const Hypergraph& h, const CycleWitness& w) {
  return distinct_cycle_shape(h, w, 2);
}

bool is_gamma_cycle(const Hypergraph& h, const CycleWitness& w) {
  if (!distinct_cycle_shape(h, w, 3)) return false;
  const std::size_t k = w.relations.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || j == i + 1) continue;
      if (h.contains(w.relations[j], w.vars[i])) return false;
    }
  }
  return true;
}

Classification classify(const Hypergraph& h, std::size_t bound) {
  Classification c;
  c.alpha = is_alpha(h);
  c.linear = is_linear(h);
  c.berge = c.alpha && c.linear;

  auto gamma = find_gamma_cycle(h, bound);
  if (gamma.found()) {
    c.gamma = Tristate::kFalse;
    c.gamma_cycle_witness = std::move(gamma.witness);
  } else if (gamma.none()) {
    c.gamma = Tristate::kTrue;
  }

  auto berge = find_berge_cycle(h, bound);
  if (berge.found()) c.berge_cycle_witness = std::move(berge.witness);

  if (c.gamma == Tristate::kTrue && !c.alpha) {
    throw InvariantViolation("gamma-acyclic hypergraph failed the alpha test");
  }
  if (c.berge && c.gamma == Tristate::kFalse) {
    throw InvariantViolation("Berge-acyclic hypergraph has a gamma cycle");
  }
  if (!berge.unknown() && berge.none() != c.berge) {
    throw InvariantViolation("Berge cycle search disagrees with alpha && linear");
  }
  return c;
}

}  // namespace jointree
