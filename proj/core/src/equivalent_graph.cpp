#include "jointree/equivalent_graph.hpp"

#include <algorithm>
#include <queue>

#include "jointree/acyclicity.hpp"
#include "jointree/errors.hpp"
#include "jointree/mcs.hpp"
#include "jointree/tree_index.hpp"

namespace jointree {

EquivalentGraph::EquivalentGraph(std::size_t num_nodes, std::vector<EgEdge> edges,
                                 std::vector<EdgeId> deleted)
    : num_nodes_(num_nodes), edges_(std::move(edges)), deleted_(std::move(deleted)) {
  std::sort(edges_.begin(), edges_.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  std::sort(deleted_.begin(), deleted_.end());
  for (const auto& e : edges_) {
    if (e.a.index() >= num_nodes_ || e.b.index() >= num_nodes_) {
      throw InputError("equivalent graph edge endpoint out of range");
    }
  }
}

EquivalentGraph EquivalentGraph::from_line_graph(const LineGraph& l) {
  std::vector<EgEdge> edges;
  edges.reserve(l.num_edges());
  for (const auto& e : l.edges()) edges.push_back({e.id, e.a, e.b, e.weight});
  return EquivalentGraph(l.num_nodes(), std::move(edges), {});
}

const EgEdge* EquivalentGraph::find(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const EgEdge& e, EdgeId v) { return e.id < v; });
  return it != edges_.end() && it->id == id ? &*it : nullptr;
}

bool operator==(const EquivalentGraph& x, const EquivalentGraph& y) {
  if (x.num_nodes_ != y.num_nodes_ || x.deleted_ != y.deleted_) return false;
  if (x.edges_.size() != y.edges_.size()) return false;
  for (std::size_t k = 0; k < x.edges_.size(); ++k) {
    const auto& e = x.edges_[k];
    const auto& f = y.edges_[k];
    if (e.id != f.id) return false;
    if (std::minmax(e.a, e.b) != std::minmax(f.a, f.b)) return false;
  }
  return true;
}

EquivalentGraph slide(EquivalentGraph g, EdgeId e, EdgeId along, bool allow_equal) {
  auto mover = std::find_if(g.edges_.begin(), g.edges_.end(), [&](const auto& x) { return x.id == e; });
  const auto* rail = g.find(along);
  if (mover == g.edges_.end() || rail == nullptr) throw InputError("slide: unknown edge");
  if (e == along) throw InputError("slide: an edge cannot slide along itself");

  bool shares_a = mover->a == rail->a || mover->a == rail->b;
  bool shares_b = mover->b == rail->a || mover->b == rail->b;
  if (!shares_a && !shares_b) throw InputError("slide: edges are not incident");

  bool ok = allow_equal ? mover->weight <= rail->weight : mover->weight < rail->weight;
  if (!ok) throw InputError("slide: the edge is not lighter than the edge it slides along");

  if (shares_a && shares_b) {
    mover->b = mover->a;  // parallel to the rail: sliding either end closes it
  } else {
    RelId& v = shares_a ? mover->a : mover->b;
    v = v == rail->a ? rail->b : rail->a;
  }
  if (mover->a == mover->b) {
    g.deleted_.insert(std::upper_bound(g.deleted_.begin(), g.deleted_.end(), e), e);
    g.edges_.erase(mover);
  }
  return g;
}

Duplicated duplicate_vertex(const Hypergraph& h, VarId x) {
  if (x.index() >= h.num_vars()) throw InputError("duplicate_vertex: unknown variable");
  auto var_names = h.var_names();
  std::string name = h.var_name(x) + "'";
  while (h.find_var(name)) name += "'";
  VarId dup(var_names.size());
  var_names.push_back(name);

  std::vector<std::vector<VarId>> chi;
  chi.reserve(h.num_relations());
  for (RelId r : h.relations()) {
    std::vector<VarId> edge(h.chi(r).begin(), h.chi(r).end());
    if (h.contains(r, x)) edge.push_back(dup);
    chi.push_back(std::move(edge));
  }
  auto rels = h.relations_with(x);
  DuplicationRecord record{x, dup, {rels.begin(), rels.end()}};
  return {Hypergraph(h.relation_names(), std::move(var_names), std::move(chi)), std::move(record)};
}

MonotoneTree build_mwjt(const Hypergraph& h, const RootedTree& t) {
  if (t.num_nodes() != h.num_relations()) throw InputError("tree does not match hypergraph");
  MonotoneTree out{h, t, {}};
  Hypergraph& hs = out.hypergraph;

  std::queue<RelId> q;
  for (RelId c : t.children(t.root())) q.push(c);
  while (!q.empty()) {
    RelId child = q.front();
    q.pop();
    for (RelId c : t.children(child)) q.push(c);

    RelId upper = *t.parent(child);
    auto grand = t.parent(upper);
    if (!grand) continue;  // root edges have no parent edge

    auto edge_vars = hs.intersection(child, upper);
    auto parent_vars = hs.intersection(upper, *grand);
    if (edge_vars.empty()) throw InputError("tree edge joins relations with no shared variable");
    auto delta = static_cast<long>(parent_vars.size()) - static_cast<long>(edge_vars.size()) + 1;
    if (delta <= 0) continue;

    std::vector<VarId> fresh;
    std::set_difference(edge_vars.begin(), edge_vars.end(), parent_vars.begin(), parent_vars.end(),
                        std::back_inserter(fresh));
    if (fresh.empty()) {
      throw InputError("tree edge is contained in its parent edge; not an MCS tree");
    }
    for (long k = 0; k < delta; ++k) {
      auto d = duplicate_vertex(hs, fresh.front());
      hs = std::move(d.hypergraph);
      out.duplications.push_back(std::move(d.record));
    }
  }

  std::vector<RelId> parent(h.num_relations(), RelId::invalid());
  for (auto [p, c] : t.edges()) parent[c.index()] = p;
  out.tree = tree_from_parents(hs, t.root(), parent, t.label_order());
  return out;
}

namespace {

// Tree edge of each non-root node, as a line-graph edge id.
std::vector<EdgeId> tree_edges_by_child(const LineGraph& l, const RootedTree& t) {
  std::vector<EdgeId> by_child(t.num_nodes(), EdgeId::invalid());
  for (auto [p, c] : t.edges()) {
    auto e = l.find_edge(p, c);
    if (!e) throw InputError("tree edge is not an edge of the line graph");
    by_child[c.index()] = *e;
  }
  return by_child;
}

struct NonTreeEdge {
  EdgeId id;
  RelId near;  // depth(near) <= depth(far)
  RelId far;
  LcaEdges lambda;
};

template <typename Visit>
void for_each_non_tree_edge(const LineGraph& l, const RootedTree& t, const TreeIndex& index,
                            Visit&& visit) {
  if (l.num_nodes() != t.num_nodes()) throw InputError("tree does not match line graph");
  for (const auto& e : l.edges()) {
    if (t.parent(e.a) == e.b || t.parent(e.b) == e.a) continue;
    RelId near = e.a;
    RelId far = e.b;
    if (index.depth(far) < index.depth(near)) std::swap(near, far);
    visit(NonTreeEdge{e.id, near, far, index.lca_edges(near, far)});
  }
}

}  // namespace

EquivalentGraph build_equivalent_graph(const LineGraph& l, const RootedTree& t) {
  std::vector<std::uint32_t> w(l.num_edges());
  for (const auto& e : l.edges()) w[e.id.index()] = e.weight;
  return build_equivalent_graph(l, t, w);
}

EquivalentGraph build_equivalent_graph(const LineGraph& l, const RootedTree& t,
                                       std::span<const std::uint32_t> weights) {
  if (weights.size() != l.num_edges()) throw InputError("weight vector size mismatch");
  auto by_child = tree_edges_by_child(l, t);
  TreeIndex index(t);

  std::vector<EgEdge> edges;
  std::vector<EdgeId> deleted;
  for (auto [p, c] : t.edges()) {
    EdgeId id = by_child[c.index()];
    edges.push_back({id, p, c, weights[id.index()]});
  }

  for_each_non_tree_edge(l, t, index, [&](const NonTreeEdge& e) {
    const auto w = weights[e.id.index()];
    const RelId lca = e.lambda.lca;
    const RelId r1 = e.lambda.first;
    const RelId r2 = e.lambda.second;
    const auto w1 = weights[by_child[r1.index()].index()];
    const auto w2 = weights[by_child[r2.index()].index()];

    if (w < w1 && w < w2) {
      deleted.push_back(e.id);
    } else if (r1 == r2 && w == w1) {
      edges.push_back({e.id, lca, r1, w});  // parallel to the single LCA edge
    } else if (r1 != r2 && w == w1 && w == w2) {
      edges.push_back({e.id, r1, r2, w});  // triangle with both LCA edges
    } else if (r1 != r2 && w == w1 && w1 < w2) {
      edges.push_back({e.id, lca, r1, w});
    } else if (r1 != r2 && w == w2 && w2 < w1) {
      edges.push_back({e.id, lca, r2, w});
    } else {
      throw InvariantViolation("non-tree edge heavier than an LCA edge; tree is not a maximum spanning tree");
    }
  });
  return EquivalentGraph(l.num_nodes(), std::move(edges), std::move(deleted));
}

EquivalentGraph build_equivalent_graph_gamma(const LineGraph& u, const RootedTree& t) {
  auto by_child = tree_edges_by_child(u, t);
  TreeIndex index(t);

  std::vector<std::uint32_t> tree_weight(u.num_edges(), 0);
  std::vector<EgEdge> edges;
  for (auto [p, c] : t.edges()) {
    EdgeId id = by_child[c.index()];
    tree_weight[id.index()] = t.link(c)->weight;
    edges.push_back({id, p, c, t.link(c)->weight});
  }

  for_each_non_tree_edge(u, t, index, [&](const NonTreeEdge& e) {
    const RelId lca = e.lambda.lca;
    const RelId r1 = e.lambda.first;
    const RelId r2 = e.lambda.second;
    const auto w1 = tree_weight[by_child[r1.index()].index()];
    const auto w2 = tree_weight[by_child[r2.index()].index()];
    if (r1 == r2) {
      edges.push_back({e.id, lca, r1, w1});
    } else if (w1 == w2) {
      edges.push_back({e.id, r1, r2, w1});
    } else if (w1 < w2) {
      edges.push_back({e.id, lca, r1, w1});
    } else {
      edges.push_back({e.id, lca, r2, w2});
    }
  });
  return EquivalentGraph(u.num_nodes(), std::move(edges), {});
}

std::vector<LineEdge> union_join_graph(const Hypergraph& h) {
  if (!is_connected(h)) throw DomainError("union join graph needs a connected hypergraph");
  if (!is_alpha(h)) throw DomainError("hypergraph is not alpha-acyclic");
  auto l = build_line_graph(h);
  auto eg = build_equivalent_graph(l, mcs_tree(h, RelId(0u)));
  std::vector<LineEdge> out;
  out.reserve(eg.edges().size());
  for (const auto& e : eg.edges()) out.push_back(l.edge(e.id));
  return out;
}

bool line_graph_is_union_join_graph(const Hypergraph& h) {
  return union_join_graph(h).size() == build_line_graph(h).num_edges();
}

}  // namespace jointree
