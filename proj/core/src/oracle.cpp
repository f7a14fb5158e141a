#include "jointree/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "jointree/acyclicity.hpp"
#include "jointree/errors.hpp"
#include "jointree/rooted_tree.hpp"
#include "union_find.hpp"

namespace jointree {

namespace {

class SpanningTreeSearch {
 public:
  SpanningTreeSearch(std::size_t n, std::span<const std::pair<RelId, RelId>> edges)
      : n_(n), edges_(edges) {}

  std::vector<std::vector<std::uint32_t>> run() {
    std::vector<std::uint32_t> label(n_);
    for (std::size_t v = 0; v < n_; ++v) label[v] = static_cast<std::uint32_t>(v);
    if (n_ > 0) recurse(0, label);
    return std::move(out_);
  }

 private:
  // label: component of each node under the chosen edges.
  void recurse(std::uint32_t k, const std::vector<std::uint32_t>& label) {
    if (chosen_.size() + 1 == n_) {
      out_.push_back(chosen_);
      return;
    }
    if (k == edges_.size()) return;
    if (!still_connectable(k, label)) return;

    auto [a, b] = edges_[k];
    const auto la = label[a.index()];
    const auto lb = label[b.index()];
    if (la != lb) {
      auto merged = label;
      for (auto& l : merged) {
        if (l == lb) l = la;
      }
      chosen_.push_back(k);
      recurse(k + 1, merged);
      chosen_.pop_back();
    }
    recurse(k + 1, label);
  }

  // Chosen components plus the undecided edges must still reach every node.
  bool still_connectable(std::uint32_t k, const std::vector<std::uint32_t>& label) const {
    detail::UnionFind uf(n_);
    for (std::size_t v = 0; v < n_; ++v) uf.unite(v, label[v]);
    std::size_t parts = 0;
    for (std::size_t v = 0; v < n_; ++v) parts += label[v] == v;
    for (std::size_t j = k; j < edges_.size() && parts > 1; ++j) {
      if (uf.unite(edges_[j].first.index(), edges_[j].second.index())) --parts;
    }
    return parts == 1;
  }

  std::size_t n_;
  std::span<const std::pair<RelId, RelId>> edges_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::vector<std::uint32_t>> out_;
};

void check_guard(std::size_t n, std::size_t max_nodes) {
  if (n > max_nodes) {
    throw GuardExceeded("brute-force spanning tree search limited to " + std::to_string(max_nodes) +
                        " nodes, got " + std::to_string(n));
  }
}

template <typename EdgeList>
std::vector<std::vector<EdgeId>> trees_as_ids(std::size_t n, const EdgeList& edges,
                                              std::size_t max_nodes) {
  std::vector<std::pair<RelId, RelId>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.a, e.b);
  std::vector<std::vector<EdgeId>> out;
  for (const auto& tree : all_spanning_trees(n, pairs, max_nodes)) {
    std::vector<EdgeId> ids;
    ids.reserve(tree.size());
    for (auto k : tree) ids.push_back(edges[k].id);
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> all_spanning_trees(
    std::size_t num_nodes, std::span<const std::pair<RelId, RelId>> edges, std::size_t max_nodes) {
  check_guard(num_nodes, max_nodes);
  for (auto [a, b] : edges) {
    if (a.index() >= num_nodes || b.index() >= num_nodes) throw InputError("edge endpoint out of range");
  }
  return SpanningTreeSearch(num_nodes, edges).run();
}

std::vector<std::vector<EdgeId>> all_spanning_trees(const LineGraph& l, std::size_t max_nodes) {
  return trees_as_ids(l.num_nodes(), l.edges(), max_nodes);
}

std::vector<std::vector<EdgeId>> all_spanning_trees(const EquivalentGraph& g, std::size_t max_nodes) {
  return trees_as_ids(g.num_nodes(), g.edges(), max_nodes);
}

OracleJoinTrees oracle_join_trees(const Hypergraph& h, std::size_t max_nodes) {
  auto l = build_line_graph(h);
  auto trees = all_spanning_trees(l, max_nodes);

  OracleJoinTrees out;
  std::uint64_t best = 0;
  std::vector<std::uint64_t> weight(trees.size(), 0);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for (EdgeId e : trees[t]) weight[t] += l.edge(e).weight;
    best = std::max(best, weight[t]);
  }
  std::vector<std::pair<RelId, RelId>> pairs;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    if (weight[t] == best) out.max_weight.push_back(trees[t]);
    pairs.clear();
    for (EdgeId e : trees[t]) pairs.emplace_back(l.edge(e).a, l.edge(e).b);
    if (validate_join_tree(h, pairs)) out.running_intersection.push_back(trees[t]);
  }
  // A single relation has one (empty) join tree and one empty spanning tree.
  return out;
}

std::vector<std::vector<EdgeId>> all_join_trees_bruteforce(const Hypergraph& h, std::size_t max_nodes) {
  auto both = oracle_join_trees(h, max_nodes);
  if (!both.running_intersection.empty() && both.running_intersection != both.max_weight) {
    throw InvariantViolation("running-intersection trees differ from maximum-weight spanning trees");
  }
  return std::move(both.running_intersection);
}

bool has_join_tree(const Hypergraph& h, std::size_t max_nodes) {
  return !all_join_trees_bruteforce(h, max_nodes).empty();
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// One draw: a random tree over n relations with variables pushed along its
// edges. Variables reused from the parent keep every occurrence set connected
// in the tree, so the result is alpha-acyclic by construction.
Hypergraph draw(Rng& rng, AcyclicClass cls, const RandomBounds& b) {
  const std::size_t n = uniform(rng, std::max<std::size_t>(1, b.min_relations), b.max_relations);
  std::vector<std::vector<std::uint32_t>> chi(n);
  std::uint32_t next_var = 0;
  const std::size_t max_shared = cls == AcyclicClass::kAlpha ? std::max<std::size_t>(1, b.max_shared) : 1;

  chi[0].push_back(next_var++);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = uniform(rng, 0, i - 1);
    const std::size_t shared = uniform(rng, 1, max_shared);
    auto pool = chi[parent];
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t s = 0; s < shared; ++s) {
      if (s < pool.size() && coin(rng, 0.6)) {
        chi[i].push_back(pool[s]);
      } else {
        chi[parent].push_back(next_var);
        chi[i].push_back(next_var++);
      }
    }
  }
  for (auto& edge : chi) {
    if (coin(rng, 0.3)) edge.push_back(next_var++);  // private variable
  }

  // Extra relations for the gamma class: subsets of existing relations.
  if (cls == AcyclicClass::kGamma) {
    const std::size_t extra = uniform(rng, 0, 2);
    for (std::size_t k = 0; k < extra && chi.size() < b.max_relations; ++k) {
      auto base = chi[uniform(rng, 0, chi.size() - 1)];
      std::shuffle(base.begin(), base.end(), rng);
      base.resize(uniform(rng, 1, base.size()));
      chi.push_back(std::move(base));
    }
  }

  // Shuffle relation ids so the tree is not aligned with them.
  std::vector<std::size_t> order(chi.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::string> rel_names;
  std::vector<std::string> var_names;
  for (std::uint32_t x = 0; x < next_var; ++x) var_names.push_back("v" + std::to_string(x + 1));
  std::vector<std::vector<VarId>> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rel_names.push_back("R" + std::to_string(i + 1));
    std::vector<VarId> e;
    for (auto x : chi[order[i]]) e.emplace_back(x);
    edges.push_back(std::move(e));
  }
  return Hypergraph(std::move(rel_names), std::move(var_names), std::move(edges));
}

bool in_class(const Hypergraph& h, AcyclicClass cls) {
  if (!is_connected(h) || !is_alpha(h)) return false;
  switch (cls) {
    case AcyclicClass::kAlpha:
      return true;
    case AcyclicClass::kBerge:
      return is_berge(h);
    case AcyclicClass::kGamma:
      return find_gamma_cycle(h, h.num_relations()).none();
  }
  return false;
}

}  // namespace

Hypergraph random_acyclic_hypergraph(std::uint64_t seed, AcyclicClass cls, const RandomBounds& bounds) {
  if (bounds.max_relations == 0 || bounds.min_relations > bounds.max_relations) {
    throw InputError("invalid relation bounds");
  }
  Rng rng(seed);
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    auto h = draw(rng, cls, bounds);
    if (h.num_vars() > bounds.max_vars) continue;
    if (in_class(h, cls)) return h;
  }
  throw GuardExceeded("no hypergraph of the requested class within the sampling budget");
}

}  // namespace jointree
