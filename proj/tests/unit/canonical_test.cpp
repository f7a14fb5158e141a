#include <gtest/gtest.h>

#include <algorithm>
#include <queue>

#include "fixtures.hpp"
#include "jointree/canonical.hpp"
#include "jointree/errors.hpp"
#include "jointree/line_graph.hpp"
#include "jointree/mcs.hpp"
#include "jointree/oracle.hpp"

namespace jointree {
namespace {

using testing::rel;

TEST(CanonicalTree, PathFromMiddle) {
  auto h = testing::h_path();
  auto t = canonical_tree(h, rel(h, "R2"));
  EXPECT_EQ(t.parent(rel(h, "R1")), rel(h, "R2"));
  EXPECT_EQ(t.parent(rel(h, "R3")), rel(h, "R2"));
  EXPECT_EQ(t.depth(rel(h, "R1")), 1u);
  EXPECT_EQ(t.depth(rel(h, "R2")), 0u);
  EXPECT_EQ(t.depth(rel(h, "R3")), 1u);
  EXPECT_TRUE(is_canonical(h, t));
}

TEST(CanonicalTree, CliqueIsAStar) {
  auto h = testing::clique(4);
  auto t = canonical_tree(h, RelId(0u));
  for (std::size_t k = 1; k < 4; ++k) EXPECT_EQ(t.depth(RelId(k)), 1u);
}

TEST(CanonicalTree, RequiresBergeAcyclicity) {
  EXPECT_THROW(canonical_tree(testing::h_comp(), RelId(0u)), DomainError);
  EXPECT_THROW(canonical_tree(testing::h_path(), RelId(7u)), InputError);
}

TEST(IsCanonical, RejectsDeeperTree) {
  auto h = testing::clique(3);
  auto chain = tree_from_parents(h, RelId(0u), {RelId::invalid(), RelId(0u), RelId(1u)});
  EXPECT_TRUE(validate_join_tree(h, chain));
  EXPECT_FALSE(is_canonical(h, chain));
}

TEST(GeodeticCheck, Fixtures) {
  EXPECT_TRUE(geodetic_check(build_line_graph(testing::h_path())));
  EXPECT_TRUE(geodetic_check(build_line_graph(testing::clique(4))));
  auto square = testing::make({{"R1", {"a", "d"}}, {"R2", {"a", "b"}}, {"R3", {"b", "c"}}, {"R4", {"c", "d"}}});
  EXPECT_FALSE(geodetic_check(build_line_graph(square)));
}

TEST(BfsDistances, PathAndUnreachable) {
  auto d = bfs_distances(build_line_graph(testing::h_path()), RelId(0u));
  EXPECT_EQ(d, (std::vector<std::uint32_t>{0, 1, 2}));
  auto disc = testing::make({{"R1", {"a"}}, {"R2", {"b"}}});
  EXPECT_EQ(bfs_distances(build_line_graph(disc), RelId(0u))[1], UINT32_MAX);
}

// Edges on shortest paths from the root: (u, v) with d(v) = d(u) + 1.
std::vector<std::pair<RelId, RelId>> shortest_path_union(const LineGraph& l, RelId root) {
  auto d = bfs_distances(l, root);
  std::vector<std::pair<RelId, RelId>> out;
  for (const auto& e : l.edges()) {
    if (d[e.a.index()] + 1 == d[e.b.index()]) out.emplace_back(e.a, e.b);
    if (d[e.b.index()] + 1 == d[e.a.index()]) out.emplace_back(e.b, e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_block_graph(const LineGraph& l) {
  const std::size_t n = l.num_nodes();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : l.edges()) adj[e.a.index()][e.b.index()] = adj[e.b.index()][e.a.index()] = true;
  // No induced diamond: two adjacent nodes with two non-adjacent common neighbours.
  for (const auto& e : l.edges()) {
    std::vector<std::size_t> common;
    for (std::size_t w = 0; w < n; ++w) {
      if (adj[e.a.index()][w] && adj[e.b.index()][w]) common.push_back(w);
    }
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (!adj[common[i]][common[j]]) return false;
      }
    }
  }
  // Chordal: repeatedly remove a simplicial vertex.
  std::vector<bool> alive(n, true);
  for (std::size_t round = 0; round < n; ++round) {
    bool removed = false;
    for (std::size_t v = 0; v < n && !removed; ++v) {
      if (!alive[v]) continue;
      std::vector<std::size_t> nb;
      for (std::size_t w = 0; w < n; ++w) {
        if (alive[w] && adj[v][w]) nb.push_back(w);
      }
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j) clique = adj[nb[i]][nb[j]];
      }
      if (clique) {
        alive[v] = false;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

TEST(CanonicalTree, RandomBergeInstances) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto h = random_acyclic_hypergraph(seed, AcyclicClass::kBerge);
    auto l = build_line_graph(h);
    EXPECT_TRUE(geodetic_check(l)) << seed;
    EXPECT_TRUE(is_block_graph(l)) << seed;
    for (RelId root : h.relations()) {
      auto t = canonical_tree(h, root);
      EXPECT_TRUE(is_canonical(h, t)) << seed;
      std::vector<std::pair<RelId, RelId>> edges = t.edges();
      std::sort(edges.begin(), edges.end());
      EXPECT_EQ(edges, shortest_path_union(l, root)) << seed;

      // Consecutive edge labels along each root-to-leaf path are distinct.
      for (auto [p, c] : t.edges()) {
        auto gp = t.parent(p);
        if (!gp) continue;
        EXPECT_NE(t.link(c)->label, t.link(p)->label) << seed;
      }
    }
  }
}

TEST(CanonicalTree, SingleBergeCycleCounterexample) {
  // Shortest paths stop being unique as soon as the input is cyclic.
  auto h = testing::make({{"R1", {"a", "d"}}, {"R2", {"a", "b"}}, {"R3", {"b", "c"}}, {"R4", {"c", "d"}}});
  EXPECT_THROW(canonical_tree(h, RelId(0u)), DomainError);
}

}  // namespace
}  // namespace jointree
