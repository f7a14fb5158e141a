#include "jointree/line_graph.hpp"

#include <algorithm>

#include "jointree/errors.hpp"

namespace jointree {

LineGraph::LineGraph(std::size_t num_nodes, std::vector<LineEdge> edges)
    : edges_(std::move(edges)), adjacency_(num_nodes) {
  for (auto& e : edges_) {
    if (e.a == e.b) throw InputError("line graph cannot contain a self-loop");
    if (e.b < e.a) std::swap(e.a, e.b);
    if (e.b.index() >= num_nodes) throw InputError("line graph edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const auto& x, const auto& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto& e = edges_[k];
    e.id = EdgeId(k);
    adjacency_[e.a.index()].emplace_back(e.b, e.id);
    adjacency_[e.b.index()].emplace_back(e.a, e.id);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    for (std::size_t k = 1; k < nbrs.size(); ++k) {
      if (nbrs[k].first == nbrs[k - 1].first) throw InputError("line graph must be simple");
    }
  }
}

std::optional<EdgeId> LineGraph::find_edge(RelId u, RelId v) const {
  const auto& nbrs = adjacency_[u.index()];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::pair(v, EdgeId(0u)),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
  if (it != nbrs.end() && it->first == v) return it->second;
  return std::nullopt;
}

std::size_t LineGraph::total_weight() const {
  std::size_t w = 0;
  for (const auto& e : edges_) w += e.weight;
  return w;
}

LineGraph build_line_graph(const Hypergraph& h) {
  const std::size_t m = h.num_relations();

  // Relation multigraph: M[a] holds one (b, x) entry per variable x shared with b.
  std::vector<std::vector<std::pair<RelId, VarId>>> multi(m);
  for (std::size_t x = 0; x < h.num_vars(); ++x) {
    auto rels = h.relations_with(VarId(x));
    for (RelId a : rels) {
      for (RelId b : rels) {
        if (a != b) multi[a.index()].emplace_back(b, VarId(x));
      }
    }
  }

  // Counting pass; weight[j] is reset once the edge (i, j) has been emitted.
  std::vector<std::uint32_t> weight(m, 0);
  std::vector<std::vector<VarId>> label(m);
  std::vector<LineEdge> edges;
  std::vector<LineEdge> row;
  for (std::size_t i = 0; i < m; ++i) {
    for (auto [j, x] : multi[i]) {
      ++weight[j.index()];
      label[j.index()].push_back(x);
    }
    row.clear();
    for (auto [j, x] : multi[i]) {
      if (weight[j.index()] == 0) continue;
      if (j.index() > i) {
        auto& l = label[j.index()];
        std::sort(l.begin(), l.end());
        row.push_back(LineEdge{EdgeId(), RelId(i), j, weight[j.index()], l});
      }
      weight[j.index()] = 0;
      label[j.index()].clear();
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.b < y.b; });
    for (auto& e : row) edges.push_back(std::move(e));
  }
  return LineGraph(m, std::move(edges));
}

LineGraph build_line_graph(const PredicateSet& preds) {
  return build_line_graph(build_hypergraph(preds));
}

}  // namespace jointree
