#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "jointree/acyclicity.hpp"
#include "jointree/errors.hpp"
#include "jointree/oracle.hpp"

namespace jointree {
namespace {

using testing::rel;
using testing::var;

TEST(Gyo, PathReducesLeafFirst) {
  auto h = testing::h_path();
  auto r = gyo_reduce(h);
  ASSERT_TRUE(std::holds_alternative<GyoOrder>(r));
  const auto& steps = std::get<GyoOrder>(r).steps;
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0], (GyoStep{rel(h, "R1"), rel(h, "R2")}));
  EXPECT_EQ(steps[1], (GyoStep{rel(h, "R2"), rel(h, "R3")}));
  EXPECT_EQ(steps[2], (GyoStep{rel(h, "R3"), std::nullopt}));
  EXPECT_TRUE(is_gyo_order(h, steps));
}

TEST(Gyo, TriangleHasNoEar) {
  auto r = gyo_reduce(testing::h_cyc());
  ASSERT_TRUE(std::holds_alternative<GyoFailure>(r));
  EXPECT_EQ(std::get<GyoFailure>(r).residue.size(), 3u);
}

TEST(Gyo, CoveringRelationBecomesParent) {
  auto h = testing::h_gam();
  auto r = gyo_reduce(h);
  ASSERT_TRUE(std::holds_alternative<GyoOrder>(r));
  for (const auto& s : std::get<GyoOrder>(r).steps) {
    if (s.ear != rel(h, "R3")) {
      EXPECT_EQ(s.parent, rel(h, "R3"));
    }
  }
}

TEST(Gyo, RejectsBadOrders) {
  auto h = testing::h_path();
  // R2 removed first: its intersection with R1 is not covered by R3.
  EXPECT_FALSE(is_gyo_order(h, {{RelId(1u), RelId(2u)}, {RelId(0u), RelId(2u)}, {RelId(2u), std::nullopt}}));
  EXPECT_FALSE(is_gyo_order(h, {{RelId(0u), RelId(1u)}}));
}

TEST(Classification, Flags) {
  EXPECT_TRUE(is_alpha(testing::h_path()));
  EXPECT_FALSE(is_alpha(testing::h_cyc()));
  EXPECT_TRUE(is_alpha(testing::h_comp()));

  EXPECT_TRUE(is_linear(testing::h_path()));
  EXPECT_FALSE(is_linear(testing::h_comp()));
  EXPECT_TRUE(is_linear(testing::clique(4)));

  EXPECT_TRUE(is_berge(testing::h_path()));
  EXPECT_FALSE(is_berge(testing::h_comp()));
  EXPECT_FALSE(is_berge(testing::h_cyc()));
}

TEST(GammaCycle, CoveringRelation) {
  auto h = testing::h_gam();
  auto s = find_gamma_cycle(h);
  ASSERT_TRUE(s.found());
  EXPECT_TRUE(is_gamma_cycle(h, *s.witness));
  EXPECT_EQ(s.witness->relations.size(), 3u);
}

TEST(GammaCycle, ListedWitnessIsAccepted) {
  auto h = testing::h_gam();
  CycleWitness w{{rel(h, "R2"), rel(h, "R3"), rel(h, "R1")}, {var(h, "c"), var(h, "a"), var(h, "b")}};
  EXPECT_TRUE(is_gamma_cycle(h, w));
  // b joins R1 and R2 but also sits in R3, so it cannot come first.
  CycleWitness bad{{rel(h, "R1"), rel(h, "R2"), rel(h, "R3")}, {var(h, "b"), var(h, "c"), var(h, "a")}};
  EXPECT_FALSE(is_gamma_cycle(h, bad));
}

TEST(GammaCycle, CompositeKey) {
  auto h = testing::h_comp();
  auto s = find_gamma_cycle(h);
  ASSERT_TRUE(s.found());
  EXPECT_EQ(s.witness->relations, (std::vector<RelId>{rel(h, "A"), rel(h, "B"), rel(h, "C")}));
  EXPECT_EQ(s.witness->vars, (std::vector<VarId>{var(h, "y"), var(h, "z"), var(h, "x")}));
}

TEST(GammaCycle, NoneOnPath) { EXPECT_TRUE(find_gamma_cycle(testing::h_path()).none()); }

TEST(GammaCycle, UnknownAboveBound) {
  auto h = testing::clique(5);
  EXPECT_TRUE(find_gamma_cycle(h, 4).unknown());
  EXPECT_TRUE(find_gamma_cycle(h, 5).none());
}

TEST(BergeCycle, Fixtures) {
  EXPECT_TRUE(find_berge_cycle(testing::h_path()).none());
  auto comp = find_berge_cycle(testing::h_comp());
  ASSERT_TRUE(comp.found());
  EXPECT_TRUE(is_berge_cycle(testing::h_comp(), *comp.witness));

  auto h = testing::make({{"R1", {"a", "b"}}, {"R2", {"a", "b", "c"}}});
  auto s = find_berge_cycle(h);
  ASSERT_TRUE(s.found());
  EXPECT_EQ(s.witness->relations, (std::vector<RelId>{rel(h, "R1"), rel(h, "R2")}));
  EXPECT_EQ(s.witness->vars, (std::vector<VarId>{var(h, "a"), var(h, "b")}));
}

TEST(Classify, Path) {
  auto c = classify(testing::h_path());
  EXPECT_TRUE(c.alpha);
  EXPECT_TRUE(c.linear);
  EXPECT_TRUE(c.berge);
  EXPECT_EQ(c.gamma, Tristate::kTrue);
}

TEST(Classify, CompositeKey) {
  auto c = classify(testing::h_comp());
  EXPECT_TRUE(c.alpha);
  EXPECT_FALSE(c.linear);
  EXPECT_FALSE(c.berge);
  EXPECT_EQ(c.gamma, Tristate::kFalse);
  EXPECT_TRUE(c.gamma_cycle_witness);
}

TEST(Classify, Triangle) {
  auto c = classify(testing::h_cyc());
  EXPECT_FALSE(c.alpha);
  EXPECT_FALSE(c.berge);
  EXPECT_EQ(c.gamma, Tristate::kFalse);
}

TEST(Classify, HierarchyHoldsOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    for (auto cls : {AcyclicClass::kAlpha, AcyclicClass::kBerge, AcyclicClass::kGamma}) {
      auto h = random_acyclic_hypergraph(seed, cls);
      auto c = classify(h);
      if (c.berge) EXPECT_EQ(c.gamma, Tristate::kTrue) << seed;
      if (c.gamma == Tristate::kTrue) EXPECT_TRUE(c.alpha) << seed;
      EXPECT_EQ(c.berge, find_berge_cycle(h).none()) << seed;
      EXPECT_EQ(is_alpha(h), has_join_tree(h)) << seed;
    }
  }
}

TEST(Classify, AlphaMatchesOracleOnPerturbedInstances) {
  // Adding a variable shared by two random relations usually breaks acyclicity.
  std::mt19937_64 rng(3);
  int cyclic = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto base = random_acyclic_hypergraph(seed, AcyclicClass::kAlpha, {3, 7, 12, 3});
    auto names = base.relation_names();
    std::vector<std::vector<VarId>> chi;
    for (RelId r : base.relations()) chi.emplace_back(base.chi(r).begin(), base.chi(r).end());
    auto vars = base.var_names();
    vars.push_back("extra");
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    chi[a].push_back(VarId(vars.size() - 1));
    chi[b].push_back(VarId(vars.size() - 1));
    Hypergraph h(names, vars, chi);
    bool alpha = is_alpha(h);
    cyclic += !alpha;
    EXPECT_EQ(alpha, has_join_tree(h)) << seed;
  }
  EXPECT_GT(cyclic, 0);
}

}  // namespace
}  // namespace jointree
