#include "jointree/tree_index.hpp"

#include <algorithm>
#include <bit>

#include "jointree/errors.hpp"

namespace jointree {

namespace {

std::uint32_t floor_log2(std::uint32_t x) { return static_cast<std::uint32_t>(std::bit_width(x)) - 1; }

}  // namespace

TreeIndex::TreeIndex(const RootedTree& tree) {
  const std::size_t n = tree.num_nodes();
  depth_.resize(n);
  parent_.assign(n, RelId::invalid());
  for (std::size_t v = 0; v < n; ++v) {
    depth_[v] = tree.depth(RelId(v));
    if (auto p = tree.parent(RelId(v))) parent_[v] = *p;
  }

  // Euler tour, iterative.
  euler_.reserve(2 * n);
  first_.assign(n, 0);
  std::vector<std::pair<RelId, std::size_t>> stack{{tree.root(), 0}};
  first_[tree.root().index()] = 0;
  euler_.push_back(tree.root());
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    auto kids = tree.children(u);
    if (next < kids.size()) {
      RelId c = kids[next++];
      first_[c.index()] = static_cast<std::uint32_t>(euler_.size());
      euler_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) euler_.push_back(stack.back().first);
    }
  }

  const auto m = static_cast<std::uint32_t>(euler_.size());
  const std::uint32_t levels = floor_log2(m) + 1;
  sparse_.resize(levels);
  sparse_[0].resize(m);
  for (std::uint32_t i = 0; i < m; ++i) sparse_[0][i] = i;
  for (std::uint32_t k = 1; k < levels; ++k) {
    const std::uint32_t span = 1u << k;
    sparse_[k].resize(m - span + 1);
    for (std::uint32_t i = 0; i + span <= m; ++i) {
      auto a = sparse_[k - 1][i];
      auto b = sparse_[k - 1][i + span / 2];
      sparse_[k][i] = depth_[euler_[a].index()] <= depth_[euler_[b].index()] ? a : b;
    }
  }

  // Jump pointers.
  const std::uint32_t jump_levels = n > 1 ? floor_log2(static_cast<std::uint32_t>(n - 1)) + 1 : 1;
  jump_.assign(jump_levels, std::vector<RelId>(n));
  for (std::size_t v = 0; v < n; ++v) {
    jump_[0][v] = parent_[v].valid() ? parent_[v] : RelId(v);
  }
  for (std::uint32_t k = 1; k < jump_levels; ++k) {
    for (std::size_t v = 0; v < n; ++v) jump_[k][v] = jump_[k - 1][jump_[k - 1][v].index()];
  }

  // Longest-path decomposition; heights bottom-up over reverse BFS order.
  const auto& bfs = tree.bfs_order();
  std::vector<std::uint32_t> height(n, 1);
  std::vector<RelId> tall_child(n, RelId::invalid());
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    RelId v = *it;
    for (RelId c : tree.children(v)) {
      if (height[c.index()] + 1 > height[v.index()]) {
        height[v.index()] = height[c.index()] + 1;
        tall_child[v.index()] = c;
      }
    }
  }
  ladder_of_.assign(n, 0);
  ladder_pos_.assign(n, 0);
  for (RelId top : bfs) {
    if (parent_[top.index()].valid() && tall_child[parent_[top.index()].index()] == top) continue;
    std::vector<RelId> path;
    for (RelId v = top; v.valid(); v = tall_child[v.index()]) path.push_back(v);
    // Extend upward by up to |path| ancestors.
    std::vector<RelId> ladder;
    RelId a = parent_[top.index()];
    for (std::size_t k = 0; k < path.size() && a.valid(); ++k) {
      ladder.push_back(a);
      a = parent_[a.index()];
    }
    std::reverse(ladder.begin(), ladder.end());
    const auto id = static_cast<std::uint32_t>(ladders_.size());
    for (RelId v : path) {
      ladder_of_[v.index()] = id;
      ladder_pos_[v.index()] = static_cast<std::uint32_t>(ladder.size());
      ladder.push_back(v);
    }
    ladders_.push_back(std::move(ladder));
  }
}

RelId TreeIndex::lca(RelId u, RelId v) const {
  auto l = first_[u.index()];
  auto r = first_[v.index()];
  if (l > r) std::swap(l, r);
  const auto k = floor_log2(r - l + 1);
  auto a = sparse_[k][l];
  auto b = sparse_[k][r + 1 - (1u << k)];
  return depth_[euler_[a].index()] <= depth_[euler_[b].index()] ? euler_[a] : euler_[b];
}

RelId TreeIndex::level_ancestor(RelId u, std::uint32_t d) const {
  const auto du = depth_[u.index()];
  if (d > du) throw InputError("level ancestor depth exceeds node depth");
  const auto delta = du - d;
  if (delta == 0) return u;
  const auto k = floor_log2(delta);
  RelId w = jump_[k][u.index()];
  const auto rest = delta - (1u << k);
  return ladders_[ladder_of_[w.index()]][ladder_pos_[w.index()] - rest];
}

LcaEdges TreeIndex::lca_edges(RelId u, RelId v) const {
  if (u == v) throw InputError("lca edges need two distinct endpoints");
  if (parent_[u.index()] == v || parent_[v.index()] == u) {
    throw InputError("lca edges are defined for non-tree edges only");
  }
  RelId l = lca(u, v);
  const auto d = depth_[l.index()] + 1;
  if (l == u) {
    RelId c = level_ancestor(v, d);
    return {l, c, c};
  }
  if (l == v) {
    RelId c = level_ancestor(u, d);
    return {l, c, c};
  }
  return {l, level_ancestor(u, d), level_ancestor(v, d)};
}

}  // namespace jointree
