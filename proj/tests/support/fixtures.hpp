#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jointree/hypergraph.hpp"
#include "jointree/ids.hpp"
#include "jointree/line_graph.hpp"

namespace jointree::testing {

using Spec = std::vector<std::pair<std::string, std::vector<std::string>>>;

Hypergraph make(const Spec& spec);

// R1={a,b}, R2={b,c}, R3={c,d}
Hypergraph h_path();
// R1={a,b}, R2={b,c}, R3={c,a}
Hypergraph h_cyc();
// R1={a,b}, R2={b,c}, R3={a,b,c}
Hypergraph h_gam();
// A={x,y}, B={x,y,z}, C={x,z}
Hypergraph h_comp();
// R_i={a,b_i}, i=1..n
Hypergraph clique(std::size_t n);
// P={a,p}, S={a,s}, T={a,c}, U={a,c,d}, W={a,c,w}, Y={a,d}; |H|=14, |L|=19.
Hypergraph six_relations();

RelId rel(const Hypergraph& h, const std::string& name);
VarId var(const Hypergraph& h, const std::string& name);
EdgeId edge(const Hypergraph& h, const LineGraph& l, const std::string& a, const std::string& b);

}  // namespace jointree::testing
