#include "jointree/rooted_tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "jointree/errors.hpp"
#include "union_find.hpp"

namespace jointree {

RootedTree::RootedTree(RelId root, std::vector<std::optional<ParentLink>> links,
                       std::vector<RelId> label_order)
    : root_(root), links_(std::move(links)), label_order_(std::move(label_order)) {
  const std::size_t n = links_.size();
  if (root_.index() >= n) throw InputError("tree root out of range");
  if (links_[root_.index()]) throw InputError("tree root must not have a parent");

  children_.assign(n, {});
  for (std::size_t r = 0; r < n; ++r) {
    if (r == root_.index()) continue;
    if (!links_[r]) throw InputError("tree has more than one root");
    auto p = links_[r]->parent;
    if (p.index() >= n || p.index() == r) throw InputError("invalid parent link");
    children_[p.index()].emplace_back(r);
  }

  depth_.assign(n, 0);
  bfs_.reserve(n);
  bfs_.push_back(root_);
  for (std::size_t head = 0; head < bfs_.size(); ++head) {
    RelId u = bfs_[head];
    for (RelId c : children_[u.index()]) {
      depth_[c.index()] = depth_[u.index()] + 1;
      bfs_.push_back(c);
    }
  }
  if (bfs_.size() != n) throw InputError("parent links contain a cycle");
}

std::optional<RelId> RootedTree::parent(RelId r) const {
  const auto& l = links_[r.index()];
  if (!l) return std::nullopt;
  return l->parent;
}

std::vector<std::pair<RelId, RelId>> RootedTree::edges() const {
  std::vector<std::pair<RelId, RelId>> out;
  out.reserve(links_.size());
  for (std::size_t r = 0; r < links_.size(); ++r) {
    if (links_[r]) out.emplace_back(links_[r]->parent, RelId(r));
  }
  return out;
}

std::uint64_t RootedTree::total_weight() const {
  std::uint64_t w = 0;
  for (const auto& l : links_) {
    if (l) w += l->weight;
  }
  return w;
}

RootedTree tree_from_parents(const Hypergraph& h, RelId root, const std::vector<RelId>& parent,
                             std::vector<RelId> label_order) {
  if (parent.size() != h.num_relations()) throw InputError("parent array size mismatch");
  std::vector<std::optional<ParentLink>> links(parent.size());
  for (std::size_t r = 0; r < parent.size(); ++r) {
    if (!parent[r].valid()) continue;
    if (parent[r].index() >= parent.size()) throw InputError("parent out of range");
    auto label = h.intersection(RelId(r), parent[r]);
    links[r] = ParentLink{parent[r], static_cast<std::uint32_t>(label.size()), std::move(label)};
  }
  return RootedTree(root, std::move(links), std::move(label_order));
}

RootedTree tree_from_edges(const Hypergraph& h, RelId root,
                           std::span<const std::pair<RelId, RelId>> edges) {
  const std::size_t n = h.num_relations();
  if (root.index() >= n) throw InputError("tree root out of range");
  if (edges.size() + 1 != n) throw InputError("a spanning tree needs n-1 edges");
  std::vector<std::vector<RelId>> adj(n);
  for (auto [u, v] : edges) {
    if (u.index() >= n || v.index() >= n) throw InputError("tree edge endpoint out of range");
    adj[u.index()].push_back(v);
    adj[v.index()].push_back(u);
  }
  std::vector<RelId> parent(n);
  std::vector<bool> seen(n, false);
  std::queue<RelId> q;
  q.push(root);
  seen[root.index()] = true;
  while (!q.empty()) {
    RelId u = q.front();
    q.pop();
    for (RelId v : adj[u.index()]) {
      if (seen[v.index()]) continue;
      seen[v.index()] = true;
      parent[v.index()] = u;
      q.push(v);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("tree edges do not span the hypergraph");
  }
  return tree_from_parents(h, root, parent);
}

std::vector<EdgeId> tree_edge_ids(const LineGraph& l, const RootedTree& t) {
  std::vector<EdgeId> ids;
  ids.reserve(t.num_nodes());
  for (auto [p, c] : t.edges()) {
    auto e = l.find_edge(p, c);
    if (!e) throw InputError("tree edge is not an edge of the line graph");
    ids.push_back(*e);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool validate_join_tree(const Hypergraph& h, std::span<const std::pair<RelId, RelId>> edges) {
  const std::size_t n = h.num_relations();
  if (n == 0 || edges.size() + 1 != n) return false;

  detail::UnionFind uf(n);

  // A forest on k nodes is connected iff it has k - 1 edges; count tree edges
  // inside each neighbourhood H|x.
  std::vector<std::size_t> inside(h.num_vars(), 0);
  for (auto [u, v] : edges) {
    if (u.index() >= n || v.index() >= n || u == v) return false;
    auto shared = h.intersection(u, v);
    if (shared.empty()) return false;
    if (!uf.unite(u.index(), v.index())) return false;
    for (VarId x : shared) ++inside[x.index()];
  }
  for (std::size_t x = 0; x < h.num_vars(); ++x) {
    if (inside[x] + 1 != h.relations_with(VarId(x)).size()) return false;
  }
  return true;
}

bool validate_join_tree(const Hypergraph& h, const RootedTree& t) {
  if (t.num_nodes() != h.num_relations()) return false;
  auto e = t.edges();
  return validate_join_tree(h, std::span<const std::pair<RelId, RelId>>(e));
}

}  // namespace jointree
