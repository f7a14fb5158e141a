#include "jointree/mcs.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "jointree/errors.hpp"

namespace jointree {

TieRule TieRule::permutation(std::vector<RelId> priority) {
  TieRule t;
  t.rank_.assign(priority.size(), ~0u);
  for (std::size_t k = 0; k < priority.size(); ++k) {
    auto r = priority[k].index();
    if (r >= priority.size() || t.rank_[r] != ~0u) {
      throw InputError("tie-break priority is not a permutation");
    }
    t.rank_[r] = static_cast<std::uint32_t>(k);
  }
  return t;
}

std::uint32_t TieRule::rank(RelId r) const {
  return rank_.empty() ? r.value() : rank_[r.index()];
}

void TieRule::check(std::size_t n) const {
  if (!rank_.empty() && rank_.size() != n) {
    throw InputError("tie-break priority does not cover every relation");
  }
}

namespace {

// Unlabeled relations bucketed by marked-variable count. Counts only grow, so
// the maximum pointer moves down at most as often as it was pushed up.
class Buckets {
 public:
  Buckets(const Hypergraph& h, const TieRule& tie) : tie_(tie), count_(h.num_relations(), 0) {
    std::size_t widest = 0;
    for (RelId r : h.relations()) widest = std::max(widest, h.chi(r).size());
    buckets_.resize(widest + 1);
    for (RelId r : h.relations()) buckets_[0].insert({tie_.rank(r), r});
  }

  void erase(RelId r) { buckets_[count_[r.index()]].erase({tie_.rank(r), r}); }

  void bump(RelId r) {
    auto& c = count_[r.index()];
    buckets_[c].erase({tie_.rank(r), r});
    ++c;
    buckets_[c].insert({tie_.rank(r), r});
    top_ = std::max(top_, c);
  }

  // Highest count, then lowest rank. Count 0 means the rest is disconnected.
  std::pair<RelId, std::size_t> best() {
    while (top_ > 0 && buckets_[top_].empty()) --top_;
    return {buckets_[top_].begin()->second, top_};
  }

 private:
  const TieRule& tie_;
  std::vector<std::size_t> count_;
  std::vector<std::set<std::pair<std::uint32_t, RelId>>> buckets_;
  std::size_t top_ = 0;
};

// Runs MCS; `on_mark(x, current, labeled)` fires for every newly marked
// variable before parents are reassigned, `on_step` after each labelling.
template <typename OnMark, typename OnStep>
std::vector<RelId> run_mcs(const Hypergraph& h, RelId root, const TieRule& tie,
                           std::vector<RelId>& order, OnMark&& on_mark, OnStep&& on_step) {
  const std::size_t n = h.num_relations();
  if (root.index() >= n) throw InputError("root is not a relation of the hypergraph");
  tie.check(n);

  std::vector<RelId> parent(n, RelId::invalid());
  std::vector<bool> labeled(n, false);
  std::vector<bool> marked(h.num_vars(), false);
  Buckets buckets(h, tie);

  RelId current = root;
  order.clear();
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labeled[current.index()] = true;
    buckets.erase(current);
    order.push_back(current);
    for (VarId x : h.chi(current)) {
      if (marked[x.index()]) continue;
      marked[x.index()] = true;
      on_mark(x, current, labeled);
      for (RelId r : h.relations_with(x)) {
        if (labeled[r.index()]) continue;
        parent[r.index()] = current;
        buckets.bump(r);
      }
    }
    on_step(current, parent);
    if (i + 1 == n) break;
    auto [next, marks] = buckets.best();
    if (marks == 0) throw InputError("hypergraph is not connected");
    current = next;
  }
  return parent;
}

}  // namespace

RootedTree mcs_tree(const Hypergraph& h, RelId root, const TieRule& tie) {
  std::vector<RelId> order;
  auto parent = run_mcs(
      h, root, tie, order, [](VarId, RelId, const std::vector<bool>&) {},
      [](RelId, const std::vector<RelId>&) {});
  return tree_from_parents(h, root, parent, std::move(order));
}

std::vector<McsStep> mcs_trace(const Hypergraph& h, RelId root, const TieRule& tie) {
  std::vector<McsStep> steps;
  std::vector<RelId> order;
  run_mcs(
      h, root, tie, order, [](VarId, RelId, const std::vector<bool>&) {},
      [&](RelId r, const std::vector<RelId>& parent) { steps.push_back({r, parent}); });
  return steps;
}

McsGammaResult mcs_tree_gamma(const Hypergraph& h, RelId root, const TieRule& tie) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<LineEdge> edges;
  std::vector<RelId> order;
  auto on_mark = [&](VarId x, RelId current, const std::vector<bool>& labeled) {
    // When x is first marked, every relation containing it is either unlabeled
    // or the current one.
    auto rels = h.relations_with(x);
    for (std::size_t p = 0; p < rels.size(); ++p) {
      if (labeled[rels[p].index()] && rels[p] != current) continue;
      for (std::size_t q = p + 1; q < rels.size(); ++q) {
        if (labeled[rels[q].index()] && rels[q] != current) continue;
        auto key = (static_cast<std::uint64_t>(rels[p].value()) << 32) | rels[q].value();
        if (seen.insert(key).second) edges.push_back(LineEdge{EdgeId(), rels[p], rels[q], 0, {}});
      }
    }
  };
  auto parent = run_mcs(h, root, tie, order, on_mark, [](RelId, const std::vector<RelId>&) {});
  return {tree_from_parents(h, root, parent, std::move(order)),
          LineGraph(h.num_relations(), std::move(edges))};
}

}  // namespace jointree
