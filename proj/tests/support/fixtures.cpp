#include "fixtures.hpp"

#include <stdexcept>

namespace jointree::testing {

Hypergraph make(const Spec& spec) {
  std::vector<Hypergraph::RelationSpec> rels;
  for (const auto& [name, vars] : spec) rels.push_back({name, vars});
  return Hypergraph(rels);
}

Hypergraph h_path() { return make({{"R1", {"a", "b"}}, {"R2", {"b", "c"}}, {"R3", {"c", "d"}}}); }
Hypergraph h_cyc() { return make({{"R1", {"a", "b"}}, {"R2", {"b", "c"}}, {"R3", {"c", "a"}}}); }
Hypergraph h_gam() { return make({{"R1", {"a", "b"}}, {"R2", {"b", "c"}}, {"R3", {"a", "b", "c"}}}); }
Hypergraph h_comp() { return make({{"A", {"x", "y"}}, {"B", {"x", "y", "z"}}, {"C", {"x", "z"}}}); }

Hypergraph clique(std::size_t n) {
  Spec spec;
  for (std::size_t i = 1; i <= n; ++i) spec.push_back({"R" + std::to_string(i), {"a", "b" + std::to_string(i)}});
  return make(spec);
}

Hypergraph six_relations() {
  return make({{"P", {"a", "p"}},
               {"S", {"a", "s"}},
               {"T", {"a", "c"}},
               {"U", {"a", "c", "d"}},
               {"W", {"a", "c", "w"}},
               {"Y", {"a", "d"}}});
}

RelId rel(const Hypergraph& h, const std::string& name) {
  auto r = h.find_relation(name);
  if (!r) throw std::invalid_argument("no relation " + name);
  return *r;
}

VarId var(const Hypergraph& h, const std::string& name) {
  auto x = h.find_var(name);
  if (!x) throw std::invalid_argument("no variable " + name);
  return *x;
}

EdgeId edge(const Hypergraph& h, const LineGraph& l, const std::string& a, const std::string& b) {
  auto e = l.find_edge(rel(h, a), rel(h, b));
  if (!e) throw std::invalid_argument("no edge " + a + "-" + b);
  return *e;
}

}  // namespace jointree::testing
