#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jointree::testing {

std::uint64_t matrix_tree_count(std::size_t n, const std::vector<Pair>& edges) {
  if (n <= 1) return 1;
  const std::size_t m = n - 1;  // drop the last row and column
  std::vector<std::vector<__int128>> a(m, std::vector<__int128>(m, 0));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    if (u < m) a[u][u] += 1;
    if (v < m) a[v][v] += 1;
    if (u < m && v < m) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  // Bareiss: exact integer determinant.
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < m && a[swap][k] == 0) ++swap;
      if (swap == m) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return static_cast<std::uint64_t>(sign * a[m - 1][m - 1]);
}

std::size_t shared_count(const Hypergraph& h, std::size_t a, std::size_t b) {
  std::size_t n = 0;
  for (VarId x : h.chi(RelId(a))) {
    for (VarId y : h.chi(RelId(b))) n += x == y;
  }
  return n;
}

bool naive_running_intersection(const Hypergraph& h, const std::vector<Pair>& edges) {
  const std::size_t n = h.num_relations();
  if (edges.size() + 1 != n) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    if (shared_count(h, u, v) == 0) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto flood = [&](std::size_t start, auto keep) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto v : adj[u]) {
        if (seen[v] || !keep(v)) continue;
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
    return count;
  };
  if (flood(0, [](std::size_t) { return true; }) != n) return false;
  for (std::size_t x = 0; x < h.num_vars(); ++x) {
    std::vector<std::size_t> holders;
    for (std::size_t r = 0; r < n; ++r) {
      auto chi = h.chi(RelId(r));
      if (std::find(chi.begin(), chi.end(), VarId(x)) != chi.end()) holders.push_back(r);
    }
    auto has_x = [&](std::size_t r) { return std::find(holders.begin(), holders.end(), r) != holders.end(); };
    if (flood(holders.front(), has_x) != holders.size()) return false;
  }
  return true;
}

std::size_t NaiveTree::lca(std::size_t u, std::size_t v) const {
  while (depth[u] > depth[v]) u = parent[u];
  while (depth[v] > depth[u]) v = parent[v];
  while (u != v) {
    u = parent[u];
    v = parent[v];
  }
  return u;
}

std::size_t NaiveTree::level_ancestor(std::size_t u, std::size_t d) const {
  if (d > depth[u]) throw std::invalid_argument("depth");
  while (depth[u] > d) u = parent[u];
  return u;
}

std::vector<std::size_t> NaiveTree::path_edges(std::size_t u, std::size_t v) const {
  std::vector<std::size_t> out;
  std::size_t l = lca(u, v);
  for (; u != l; u = parent[u]) out.push_back(u);
  for (; v != l; v = parent[v]) out.push_back(v);
  return out;
}

NaiveTree random_tree(std::mt19937_64& rng, std::size_t n, std::size_t& root) {
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  NaiveTree t;
  t.parent.assign(n, 0);
  t.depth.assign(n, 0);
  root = label[0];
  t.parent[root] = root;
  for (std::size_t i = 1; i < n; ++i) {
    // Mix shallow and deep attachment so both bushy and path-like trees occur.
    std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    if (std::bernoulli_distribution(0.5)(rng)) j = i - 1;
    t.parent[label[i]] = label[j];
    t.depth[label[i]] = t.depth[label[j]] + 1;
  }
  return t;
}

std::set<std::size_t> fresh_shared(const Hypergraph& h, std::size_t grand, std::size_t parent,
                                   std::size_t child) {
  auto set_of = [&](std::size_t r) {
    std::set<std::size_t> s;
    for (VarId x : h.chi(RelId(r))) s.insert(x.index());
    return s;
  };
  auto g = set_of(grand);
  auto p = set_of(parent);
  auto c = set_of(child);
  std::set<std::size_t> out;
  for (auto x : c) {
    if (p.count(x) && !(p.count(x) && g.count(x))) out.insert(x);
  }
  return out;
}

}  // namespace jointree::testing
