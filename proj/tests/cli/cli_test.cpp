#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "jointree/enumerate.hpp"
#include "jointree/query.hpp"
#include "jointree/serialize.hpp"

namespace jointree {
namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string fixture(const std::string& name) { return std::string(JOINTREE_FIXTURE_DIR) + "/" + name; }

Run run(const std::string& args, const std::string& env = {}) {
  static int counter = 0;
  auto err_path = std::filesystem::path(::testing::TempDir()) / ("cli_stderr_" + std::to_string(counter++));
  std::string cmd = env + " \"" JOINTREE_CLI_PATH "\" " + args + " 2>\"" + err_path.string() + "\"";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(err_path);
  return r;
}

// Tree lines of the `trees` format: everything but comment headers.
std::size_t count_trees(const std::string& s) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) n += !line.empty() && line[0] != '#';
  return n;
}

std::size_t count_lines(const std::string& s, const std::string& prefix) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

TEST(Cli, Version) {
  auto r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("jointree ", 0), 0u);
}

TEST(Cli, ClassifyCompositeKey) {
  auto r = run("classify " + fixture("composite.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["alpha"], true);
  EXPECT_EQ(j["linear"], false);
  EXPECT_EQ(j["berge"], false);
  EXPECT_EQ(j["gamma"], false);
}

TEST(Cli, ClassifyPath) {
  auto j = Json::parse(run("classify " + fixture("path.json")).out);
  for (auto key : {"alpha", "linear", "berge", "gamma"}) EXPECT_EQ(j[key], true) << key;
}

TEST(Cli, MalformedInputExitsTwo) {
  auto path = std::filesystem::path(::testing::TempDir()) / "bad_query.txt";
  std::ofstream(path) << "R1.1=R2.1\nnot a predicate\n";
  auto r = run("classify " + path.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run("classify /nonexistent.json").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, CanonicalNeedsBergeAcyclicity) {
  auto r = run("canonical " + fixture("composite.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not Berge-acyclic"), std::string::npos);
}

TEST(Cli, UnknownRootExitsTwo) {
  auto r = run("mcs --root R9 " + fixture("path.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("R9"), std::string::npos);
}

TEST(Cli, EnumerateStopsAtLimit) {
  auto r = run("enumerate --limit 10 --format trees " + fixture("clique5.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_trees(r.out), 10u);
  EXPECT_NE(r.err.find("limit of 10"), std::string::npos);
}

TEST(Cli, EnumerateEditsCoverAllTrees) {
  auto r = run("enumerate " + fixture("clique4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "TREE "), 1u);
  EXPECT_EQ(count_lines(r.out, "SWAP "), 15u);
}

TEST(Cli, EnumerateRejectsCyclicInput) { EXPECT_EQ(run("enumerate " + fixture("cycle.json")).code, 1); }

TEST(Cli, GammaFastPathRefusesGammaCycle) {
  EXPECT_EQ(run("enumerate --gamma " + fixture("composite.json")).code, 1);
  auto fast = run("enumerate --gamma --format trees " + fixture("clique4.json"));
  EXPECT_EQ(fast.code, 0);
  EXPECT_EQ(count_trees(fast.out), 16u);
}

TEST(Cli, ConvertPlan) {
  auto ok = run("convert-plan --plan R3,R1,R2 " + fixture("gamma_cycle.json"));
  EXPECT_EQ(ok.code, 0) << ok.err;
  auto orphan = run("convert-plan --plan R1,R2,R3 " + fixture("gamma_cycle.json"));
  EXPECT_EQ(orphan.code, 1);
  EXPECT_NE(orphan.err.find("orphan: R3"), std::string::npos) << orphan.err;
  EXPECT_EQ(run("convert-plan --plan R1,R3,R2 " + fixture("path.json")).code, 2);
}

TEST(Cli, EmittedTreesReloadAsJoinTrees) {
  for (auto name : {"path.json", "clique4.json", "six_relations.json", "composite.json", "chain.txt"}) {
    auto h = load_query_file(fixture(name)).hypergraph;
    for (auto cmd : {"mcs", "canonical"}) {
      auto r = run(std::string(cmd) + " " + fixture(name));
      if (r.code == 1) continue;  // canonical on a non-Berge input
      ASSERT_EQ(r.code, 0) << name << ": " << r.err;
      auto t = tree_from_json(h, Json::parse(r.out));
      EXPECT_TRUE(validate_join_tree(h, t)) << name;
    }
    auto e = run("enumerate --format json " + fixture(name));
    ASSERT_EQ(e.code, 0) << name;
    auto doc = Json::parse(e.out);
    auto l = build_line_graph(h);
    for (const auto& tree : doc["trees"]) {
      std::vector<EdgeId> ids;
      for (const auto& id : tree) ids.push_back(parse_edge_name(id.get<std::string>()));
      EXPECT_TRUE(validate_join_tree(h, edge_pairs(l, ids))) << name;
    }
  }
}

TEST(Cli, OutputIsDeterministic) {
  for (auto args : {"enumerate --format trees ", "enumerate --format dot ", "mcs --format dot ", "classify "}) {
    auto a = run(args + fixture("six_relations.json"));
    auto b = run(args + fixture("six_relations.json"));
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, DisconnectedInputIsHandledPerComponent) {
  auto path = std::filesystem::path(::testing::TempDir()) / "two_parts.json";
  std::ofstream(path) << R"({"relations": {"A": ["x"], "B": ["x", "y"], "C": ["z"], "D": ["z", "w"]}})";
  auto r = run("enumerate --format trees " + path.string());
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out, "# component"), 2u);
  auto j = Json::parse(run("mcs " + path.string()).out);
  EXPECT_EQ(j["components"].size(), 2u);
}

TEST(Cli, CorpusCountsMatchClassify) {
  auto r = run("corpus --format json " + std::string(JOINTREE_FIXTURE_DIR));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  std::size_t alpha = 0, files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(JOINTREE_FIXTURE_DIR)) {
    ++files;
    alpha += Json::parse(run("classify " + entry.path().string()).out)["alpha"].get<bool>();
  }
  EXPECT_EQ(j["queries"], files);
  EXPECT_EQ(j["alpha_acyclic"], alpha);
  EXPECT_EQ(j["errors"], 0);
}

TEST(Cli, CorpusEmptyDirAndErrors) {
  auto dir = std::filesystem::path(::testing::TempDir()) / "corpus_case";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto empty = Json::parse(run("corpus --format json " + dir.string()).out);
  EXPECT_EQ(empty["queries"], 0);
  std::ofstream(dir / "bad.txt") << "garbage\n";
  std::filesystem::copy_file(fixture("path.json"), dir / "path.json");
  auto r = run("corpus --format json " + dir.string());
  EXPECT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["queries"], 1);
  EXPECT_EQ(j["errors"], 1);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyRandomInstances) {
  auto r = run("verify --seed 5 --count 3 --class gamma");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  auto f = run("verify " + fixture("six_relations.json"));
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("PASS enumeration_matches_oracle"), std::string::npos);
}

TEST(Cli, GuardsComeFromEnvironment) {
  auto r = run("verify " + fixture("six_relations.json"), "JOINTREE_ORACLE_MAX_NODES=3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIP oracle_filters_agree"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace jointree
