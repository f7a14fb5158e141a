#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "jointree/acyclicity.hpp"
#include "jointree/enumerate.hpp"
#include "jointree/errors.hpp"
#include "jointree/mcs.hpp"
#include "jointree/oracle.hpp"
#include "jointree/query.hpp"
#include "jointree/serialize.hpp"

namespace jointree {
namespace {

TEST(EdgeName, RoundTrip) {
  EXPECT_EQ(edge_name(EdgeId(4u)), "e4");
  EXPECT_EQ(parse_edge_name("e17"), EdgeId(17u));
  EXPECT_THROW(parse_edge_name("x1"), InputError);
  EXPECT_THROW(parse_edge_name("e"), InputError);
}

TEST(HypergraphJson, RoundTrip) {
  for (const auto& h : {testing::h_comp(), testing::six_relations()}) {
    auto back = hypergraph_from_json(hypergraph_to_json(h).dump());
    EXPECT_EQ(back.hypergraph, h);
  }
}

TEST(ClassificationJson, CompositeKey) {
  auto h = testing::h_comp();
  auto j = classification_to_json(h, classify(h));
  EXPECT_EQ(j["alpha"], true);
  EXPECT_EQ(j["linear"], false);
  EXPECT_EQ(j["berge"], false);
  EXPECT_EQ(j["gamma"], false);
  EXPECT_EQ(j["gamma_cycle"]["relations"], Json::parse(R"(["A","B","C"])"));
}

TEST(ClassificationJson, UnknownGamma) {
  auto h = testing::h_path();
  auto j = classification_to_json(h, classify(h, 2));
  EXPECT_EQ(j["gamma"], "unknown");
}

TEST(TreeJson, RoundTripOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto h = random_acyclic_hypergraph(seed, AcyclicClass::kAlpha);
    auto l = build_line_graph(h);
    for (RelId root : h.relations()) {
      auto t = mcs_tree(h, root);
      auto doc = Json::parse(tree_to_json(h, t, &l).dump());
      auto back = tree_from_json(h, doc);
      EXPECT_EQ(back, t);
      EXPECT_TRUE(validate_join_tree(h, back));
    }
  }
}

TEST(TreeJson, RejectsUnknownNames) {
  auto h = testing::h_path();
  auto doc = tree_to_json(h, mcs_tree(h, RelId(0u)));
  doc["edges"][0]["child"] = "R9";
  EXPECT_THROW(tree_from_json(h, doc), InputError);
}

TEST(TreeJson, Shape) {
  auto h = testing::h_path();
  auto l = build_line_graph(h);
  auto j = tree_to_json(h, mcs_tree(h, RelId(0u)), &l);
  EXPECT_EQ(j["root"], "R1");
  EXPECT_EQ(j["weight"], 2);
  EXPECT_EQ(j["edges"][0]["id"], "e0");
  EXPECT_EQ(j["edges"][1]["shared"], Json::parse(R"(["c"])"));
}

TEST(EquivalentGraphJson, ListsDeletedEdges) {
  auto h = testing::h_comp();
  auto space = prepare_join_tree_space(h, RelId(1u));
  auto j = equivalent_graph_to_json(h, space.line_graph, space.equivalent_graph);
  EXPECT_EQ(j["edges"].size(), 2u);
  EXPECT_EQ(j["deleted"], Json::parse(R"(["e1"])"));
}

TEST(Dot, LabelsSharedVariables) {
  auto h = testing::h_comp();
  auto dot = tree_to_dot(h, mcs_tree(h, RelId(1u)));
  EXPECT_NE(dot.find("graph join_tree {"), std::string::npos);
  EXPECT_NE(dot.find("x,y"), std::string::npos);
  EXPECT_NE(dot.find("x,z"), std::string::npos);
}

TEST(TextLines, Format) {
  std::vector<EdgeId> ids{EdgeId(1u), EdgeId(4u)};
  EXPECT_EQ(format_tree_line(ids), "TREE e1 e4");
  EXPECT_EQ(format_edge_list(ids), "e1 e4");
  EXPECT_EQ(format_edit_line({EdgeId(2u), EdgeId(5u)}), "SWAP +e2 -e5");
}

}  // namespace
}  // namespace jointree
