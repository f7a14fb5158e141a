#include "jointree/canonical.hpp"

#include <limits>

#include "jointree/acyclicity.hpp"
#include "jointree/errors.hpp"
#include "jointree/mcs.hpp"

namespace jointree {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

}  // namespace

RootedTree canonical_tree(const Hypergraph& h, RelId root) {
  if (root.index() >= h.num_relations()) throw InputError("unknown root relation");
  if (!is_berge(h)) throw DomainError("hypergraph is not Berge-acyclic");
  return mcs_tree(h, root);
}

std::vector<std::uint32_t> bfs_distances(const LineGraph& l, RelId root) {
  std::vector<std::uint32_t> dist(l.num_nodes(), kUnreached);
  std::vector<RelId> queue{root};
  dist[root.index()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    RelId u = queue[head];
    for (auto [v, e] : l.neighbors(u)) {
      if (dist[v.index()] != kUnreached) continue;
      dist[v.index()] = dist[u.index()] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

bool is_canonical(const Hypergraph& h, const RootedTree& t) {
  if (t.num_nodes() != h.num_relations()) return false;
  auto dist = bfs_distances(build_line_graph(h), t.root());
  for (RelId r : h.relations()) {
    if (t.depth(r) != dist[r.index()]) return false;
  }
  return true;
}

bool geodetic_check(const LineGraph& l) {
  const std::size_t n = l.num_nodes();
  std::vector<std::uint32_t> dist(n);
  std::vector<std::uint8_t> paths(n);  // shortest-path count, saturating at 2
  std::vector<RelId> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(paths.begin(), paths.end(), 0);
    queue.assign(1, RelId(s));
    dist[s] = 0;
    paths[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      RelId u = queue[head];
      for (auto [v, e] : l.neighbors(u)) {
        auto& dv = dist[v.index()];
        if (dv == kUnreached) {
          dv = dist[u.index()] + 1;
          queue.push_back(v);
        }
        if (dv == dist[u.index()] + 1) {
          paths[v.index()] = static_cast<std::uint8_t>(std::min(2, paths[v.index()] + paths[u.index()]));
        }
      }
    }
    for (auto p : paths) {
      if (p > 1) return false;
    }
  }
  return true;
}

}  // namespace jointree
