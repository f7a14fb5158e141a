#include "jointree/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "jointree/acyclicity.hpp"
#include "jointree/errors.hpp"
#include "jointree/mcs.hpp"
#include "union_find.hpp"

namespace jointree {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

EditStream::EditStream(const EquivalentGraph& eg, std::span<const EdgeId> initial)
    : eg_(eg),
      adj_(eg.num_nodes()),
      initial_(initial.begin(), initial.end()),
      status_(eg.edges().size(), Status::kFree),
      in_tree_(eg.edges().size(), false) {
  const auto& edges = eg.edges();
  for (std::uint32_t k = 0; k < edges.size(); ++k) {
    adj_[edges[k].a.index()].emplace_back(edges[k].b.index(), k);
    adj_[edges[k].b.index()].emplace_back(edges[k].a.index(), k);
  }

  std::sort(initial_.begin(), initial_.end());
  const std::size_t n = eg.num_nodes();
  if (n == 0 ? !initial_.empty() : initial_.size() + 1 != n) {
    throw InputError("initial tree does not have |nodes| - 1 edges");
  }
  detail::UnionFind uf(n);
  for (EdgeId id : initial_) {
    const auto* e = eg.find(id);
    if (e == nullptr) throw InputError("initial tree edge e" + std::to_string(id.value()) + " is not in the equivalent graph");
    if (!uf.unite(e->a.index(), e->b.index())) throw InputError("initial tree contains a cycle");
    in_tree_[static_cast<std::size_t>(e - edges.data())] = true;
  }
  descend();
}

std::vector<EdgeId> EditStream::current() const {
  std::vector<EdgeId> out;
  out.reserve(eg_.num_nodes());
  for (std::size_t k = 0; k < in_tree_.size(); ++k) {
    if (in_tree_[k]) out.push_back(eg_.edges()[k].id);
  }
  return out;
}

std::optional<Edit> EditStream::next() {
  if (done_) return std::nullopt;
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    if (!f.second_branch) {
      f.second_branch = true;
      Edit edit = switch_branch(f);
      descend();
      ++visited_;
      return edit;
    }
    status_[f.edge] = Status::kFree;
    stack_.pop_back();
  }
  done_ = true;
  return std::nullopt;
}

void EditStream::descend() {
  while (auto k = pick_branch_edge()) {
    stack_.push_back({*k, in_tree_[*k], false});
    status_[*k] = in_tree_[*k] ? Status::kIn : Status::kOut;
  }
}

// Smallest free edge that is neither a loop once the In edges are contracted
// nor a bridge of the In + Free graph. Such an edge splits the remaining trees
// into two non-empty halves.
std::optional<std::uint32_t> EditStream::pick_branch_edge() const {
  const auto& edges = eg_.edges();
  const std::size_t n = eg_.num_nodes();

  detail::UnionFind uf(n);
  for (std::uint32_t k = 0; k < edges.size(); ++k) {
    if (status_[k] == Status::kIn) uf.unite(edges[k].a.index(), edges[k].b.index());
  }

  // Iterative bridge search; parallel edges are told apart by index.
  std::vector<std::uint32_t> disc(n, kNone);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> bridge(edges.size(), false);
  struct Visit {
    std::uint32_t node;
    std::uint32_t via;
    std::uint32_t next;
  };
  std::vector<Visit> stack;
  std::uint32_t clock = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (disc[s] != kNone) continue;
    disc[s] = low[s] = clock++;
    stack.push_back({s, kNone, 0});
    while (!stack.empty()) {
      Visit& top = stack.back();
      const std::uint32_t u = top.node;
      if (top.next < adj_[u].size()) {
        auto [v, k] = adj_[u][top.next++];
        if (status_[k] == Status::kOut || k == top.via) continue;
        if (disc[v] == kNone) {
          disc[v] = low[v] = clock++;
          stack.push_back({v, k, 0});
        } else {
          low[u] = std::min(low[u], disc[v]);
        }
        continue;
      }
      const std::uint32_t via = top.via;
      stack.pop_back();
      if (stack.empty()) continue;
      const std::uint32_t p = stack.back().node;
      low[p] = std::min(low[p], low[u]);
      if (low[u] > disc[p]) bridge[via] = true;
    }
  }

  for (std::uint32_t k = 0; k < edges.size(); ++k) {
    if (status_[k] != Status::kFree || bridge[k]) continue;
    if (uf.find(edges[k].a.index()) == uf.find(edges[k].b.index())) continue;
    return k;
  }
  return std::nullopt;
}

Edit EditStream::switch_branch(const Frame& f) {
  const auto& edges = eg_.edges();
  const auto& e = edges[f.edge];
  std::uint32_t swap = kNone;

  if (f.started_in_tree) {
    // Leave the "contains e" half: replace e by the smallest free edge across
    // the cut it leaves behind.
    mark_side(e.a.index(), f.edge);
    for (std::uint32_t k = 0; k < edges.size() && swap == kNone; ++k) {
      if (status_[k] != Status::kFree) continue;
      if (side_[edges[k].a.index()] != side_[edges[k].b.index()]) swap = k;
    }
    if (swap == kNone) throw InvariantViolation("no replacement edge across the cut");
    in_tree_[f.edge] = false;
    in_tree_[swap] = true;
    status_[f.edge] = Status::kOut;
    return {edges[swap].id, e.id};
  }

  // Enter the "contains e" half: e closes a cycle, drop its smallest free edge.
  for (std::uint32_t k : tree_path(e.a.index(), e.b.index())) {
    if (status_[k] == Status::kFree && (swap == kNone || k < swap)) swap = k;
  }
  if (swap == kNone) throw InvariantViolation("no free edge on the cycle closed by the added edge");
  in_tree_[swap] = false;
  in_tree_[f.edge] = true;
  status_[f.edge] = Status::kIn;
  return {e.id, edges[swap].id};
}

void EditStream::mark_side(std::uint32_t from, std::uint32_t cut) {
  side_.assign(eg_.num_nodes(), false);
  std::vector<std::uint32_t> queue{from};
  side_[from] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto [v, k] : adj_[queue[head]]) {
      if (!in_tree_[k] || k == cut || side_[v]) continue;
      side_[v] = true;
      queue.push_back(v);
    }
  }
}

std::vector<std::uint32_t> EditStream::tree_path(std::uint32_t from, std::uint32_t to) const {
  std::vector<std::uint32_t> via(eg_.num_nodes(), kNone);
  std::vector<std::uint32_t> prev(eg_.num_nodes(), kNone);
  std::vector<std::uint32_t> queue{from};
  prev[from] = from;
  for (std::size_t head = 0; head < queue.size() && prev[to] == kNone; ++head) {
    const std::uint32_t u = queue[head];
    for (auto [v, k] : adj_[u]) {
      if (!in_tree_[k] || prev[v] != kNone) continue;
      prev[v] = u;
      via[v] = k;
      queue.push_back(v);
    }
  }
  std::vector<std::uint32_t> path;
  for (std::uint32_t v = to; v != from; v = prev[v]) path.push_back(via[v]);
  return path;
}

JoinTreeSpace prepare_join_tree_space(const Hypergraph& h, RelId root, bool gamma_fast_path) {
  if (h.empty()) throw InputError("empty hypergraph");
  if (!is_connected(h)) throw DomainError("hypergraph is disconnected; join trees need a connected query");
  if (!is_alpha(h)) throw DomainError("hypergraph is not alpha-acyclic");
  if (gamma_fast_path) {
    if (find_gamma_cycle(h).found()) throw DomainError("hypergraph has a gamma cycle");
    auto g = mcs_tree_gamma(h, root);
    auto eg = build_equivalent_graph_gamma(g.line_graph, g.tree);
    return {std::move(g.line_graph), std::move(g.tree), std::move(eg)};
  }
  auto l = build_line_graph(h);
  auto t = mcs_tree(h, root);
  auto eg = build_equivalent_graph(l, t);
  return {std::move(l), std::move(t), std::move(eg)};
}

std::vector<std::vector<EdgeId>> materialize_join_trees(EditStream& stream, std::size_t limit) {
  std::vector<std::vector<EdgeId>> out;
  if (limit == 0) return out;
  out.push_back(stream.current());
  while (out.size() < limit && stream.next()) out.push_back(stream.current());
  return out;
}

std::vector<std::vector<EdgeId>> materialize_join_trees(const Hypergraph& h, std::size_t limit) {
  auto space = prepare_join_tree_space(h, largest_relation(h));
  EditStream stream(space.equivalent_graph, tree_edge_ids(space.line_graph, space.mcs_tree));
  return materialize_join_trees(stream, limit);
}

JoinTreeCount count_join_trees(const Hypergraph& h, std::uint64_t limit) {
  auto space = prepare_join_tree_space(h, largest_relation(h));
  EditStream stream(space.equivalent_graph, tree_edge_ids(space.line_graph, space.mcs_tree));
  JoinTreeCount out{1, false};
  while (stream.next()) {
    if (++out.count > limit) {
      out.count = limit;
      out.limit_exceeded = true;
      return out;
    }
  }
  if (out.count > limit) {
    out.count = limit;
    out.limit_exceeded = true;
  }
  return out;
}

std::vector<std::pair<RelId, RelId>> edge_pairs(const LineGraph& l, std::span<const EdgeId> ids) {
  std::vector<std::pair<RelId, RelId>> out;
  out.reserve(ids.size());
  for (EdgeId id : ids) {
    if (id.index() >= l.num_edges()) throw InputError("edge id out of range");
    const auto& e = l.edge(id);
    out.emplace_back(e.a, e.b);
  }
  return out;
}

}  // namespace jointree
