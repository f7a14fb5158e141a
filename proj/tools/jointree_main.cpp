// jointree: join tree construction and enumeration for acyclic queries.
//
// Exit status: 0 success, 1 the query is outside the command's domain (not
// acyclic enough, orphaned plan, failed verification), 2 bad input or usage,
// 3 internal error.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jointree/acyclicity.hpp"
#include "jointree/canonical.hpp"
#include "jointree/enumerate.hpp"
#include "jointree/errors.hpp"
#include "jointree/mcs.hpp"
#include "jointree/oracle.hpp"
#include "jointree/plan.hpp"
#include "jointree/query.hpp"
#include "jointree/serialize.hpp"
#include "jointree/verify.hpp"

namespace fs = std::filesystem;
using namespace jointree;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

// Size guards, overridable from the environment.
std::size_t env_guard(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t v = 0;
  std::string_view s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(std::string(name) + " must be a non-negative integer");
  }
  return v;
}

std::size_t cycle_search_bound() { return env_guard("JOINTREE_CYCLE_SEARCH_BOUND", kDefaultCycleSearchBound); }

Hypergraph load(const std::string& path) {
  auto loaded = load_query_file(path);
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
  return std::move(loaded.hypergraph);
}

// One connected component and the root to use for it. --root applies to the
// component that contains it; every other component uses its largest relation.
struct Part {
  Hypergraph h;
  RelId root;
};

std::vector<Part> split(const Hypergraph& h, const std::string& root_name) {
  if (h.empty()) throw InputError("empty hypergraph");
  if (!root_name.empty() && !h.find_relation(root_name)) {
    throw InputError("unknown root relation '" + root_name + "'");
  }
  std::vector<Part> parts;
  for (auto& comp : connected_components(h)) {
    auto named = root_name.empty() ? std::nullopt : comp.find_relation(root_name);
    RelId root = named ? *named : largest_relation(comp);
    parts.push_back({std::move(comp), root});
  }
  return parts;
}

std::string component_header(const Part& p, std::size_t i) {
  std::string out = "# component " + std::to_string(i + 1) + ":";
  for (const auto& name : p.h.relation_names()) out += " " + name;
  return out;
}

void print_trees(const std::vector<Part>& parts, const std::vector<RootedTree>& trees,
                 const std::string& format) {
  const bool single = parts.size() == 1;
  if (format == "dot") {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::cout << tree_to_dot(parts[i].h, trees[i], single ? "join_tree" : "component_" + std::to_string(i + 1));
    }
    return;
  }
  Json comps = Json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto l = build_line_graph(parts[i].h);
    Json t = tree_to_json(parts[i].h, trees[i], &l);
    if (single) {
      std::cout << t.dump(2) << '\n';
      return;
    }
    comps.push_back(Json{{"relations", parts[i].h.relation_names()}, {"tree", std::move(t)}});
  }
  std::cout << Json{{"components", std::move(comps)}}.dump(2) << '\n';
}

Json classify_json(const Hypergraph& h) {
  const auto bound = cycle_search_bound();
  Json out = classification_to_json(h, classify(h, bound));
  Json comps = Json::array();
  for (const auto& part : connected_components(h)) {
    Json c;
    c["relations"] = part.relation_names();
    Json flags = classification_to_json(part, classify(part, bound));
    for (auto& [k, v] : flags.items()) c[k] = v;
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);
  return out;
}

int cmd_classify(const std::string& file) {
  std::cout << classify_json(load(file)).dump(2) << '\n';
  return 0;
}

int cmd_corpus(const std::string& dir, const std::string& format) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Row {
    std::size_t files = 0, queries = 0, alpha = 0, composite = 0, berge = 0, gamma = 0, errors = 0;
  } row;
  const auto bound = cycle_search_bound();
  for (const auto& path : files) {
    ++row.files;
    try {
      auto h = load_query_file(path).hypergraph;
      auto c = classify(h, bound);
      ++row.queries;
      row.alpha += c.alpha;
      row.composite += c.alpha && !c.linear;
      row.berge += c.berge;
      row.gamma += c.gamma == Tristate::kTrue;
    } catch (const InputError& e) {
      ++row.errors;
      std::cerr << path.string() << ": " << e.what() << '\n';
    }
  }

  if (format == "json") {
    Json out{{"files", row.files},   {"queries", row.queries},     {"alpha_acyclic", row.alpha},
             {"composite_key", row.composite}, {"berge_acyclic", row.berge}, {"gamma_acyclic", row.gamma},
             {"errors", row.errors}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "queries\talpha\tcomposite_key\tberge\tgamma\terrors\n"
              << row.queries << '\t' << row.alpha << '\t' << row.composite << '\t' << row.berge << '\t'
              << row.gamma << '\t' << row.errors << '\n';
  }
  return 0;
}

int cmd_mcs(const std::string& file, const std::string& root_name, const std::string& format) {
  auto parts = split(load(file), root_name);
  std::vector<RootedTree> trees;
  for (const auto& p : parts) {
    if (!is_alpha(p.h)) throw DomainError("hypergraph is not alpha-acyclic; MCS yields no join tree");
    trees.push_back(mcs_tree(p.h, p.root));
  }
  print_trees(parts, trees, format);
  return 0;
}

int cmd_canonical(const std::string& file, const std::string& root_name, const std::string& format) {
  auto parts = split(load(file), root_name);
  std::vector<RootedTree> trees;
  for (const auto& p : parts) trees.push_back(canonical_tree(p.h, p.root));
  print_trees(parts, trees, format);
  return 0;
}

// Streams the join trees of one component. Returns the JSON record for
// --format json (null otherwise).
Json enumerate_part(const Part& part, std::uint64_t limit, const std::string& format, bool gamma,
                    bool& truncated) {
  const auto& h = part.h;
  auto space = prepare_join_tree_space(h, part.root, gamma);
  const auto& l = space.line_graph;
  if (format == "dot") return nullptr;

  EditStream stream(space.equivalent_graph, tree_edge_ids(l, space.mcs_tree));
  Json trees = Json::array();
  auto emit = [&](const std::optional<Edit>& edit) {
    if (format == "edits") {
      std::cout << (edit ? format_edit_line(*edit) : format_tree_line(stream.current())) << '\n';
    } else if (format == "trees") {
      std::cout << format_edge_list(stream.current()) << '\n';
    } else {
      Json t = Json::array();
      for (EdgeId id : stream.current()) t.push_back(edge_name(id));
      trees.push_back(std::move(t));
    }
  };

  bool complete = true;
  if (limit == 0) {
    complete = false;
  } else {
    emit(std::nullopt);
    for (std::uint64_t emitted = 1;; ++emitted) {
      auto edit = stream.next();
      if (!edit) break;
      if (emitted == limit) {
        complete = false;
        break;
      }
      emit(edit);
    }
  }
  truncated = truncated || !complete;
  if (format != "json") return nullptr;
  return Json{{"relations", h.relation_names()},
              {"equivalent_graph", equivalent_graph_to_json(h, l, space.equivalent_graph)},
              {"trees", std::move(trees)},
              {"complete", complete}};
}

int cmd_enumerate(const std::string& file, const std::string& root_name, std::uint64_t limit,
                  const std::string& format, bool gamma) {
  auto parts = split(load(file), root_name);
  const bool single = parts.size() == 1;
  if (format == "dot") {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto space = prepare_join_tree_space(parts[i].h, parts[i].root, gamma);
      std::cout << equivalent_graph_to_dot(parts[i].h, space.line_graph, space.equivalent_graph,
                                           single ? "equivalent_graph" : "component_" + std::to_string(i + 1));
    }
    return 0;
  }

  bool truncated = false;
  Json comps = Json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!single && format != "json") std::cout << component_header(parts[i], i) << '\n';
    comps.push_back(enumerate_part(parts[i], limit, format, gamma, truncated));
  }
  if (format == "json") {
    if (single) {
      comps[0].erase("relations");
      std::cout << comps[0].dump(2) << '\n';
    } else {
      std::cout << Json{{"components", std::move(comps)}}.dump(2) << '\n';
    }
  }
  if (truncated) std::cerr << "limit of " << limit << " join trees reached; output truncated\n";
  return 0;
}

int cmd_convert_plan(const std::string& file, const std::string& plan_text, const std::string& format) {
  auto h = load(file);
  auto plan = parse_plan(h, plan_text);
  auto result = convert_plan(h, plan);
  if (const auto* orphan = std::get_if<Orphan>(&result)) {
    std::string key;
    for (VarId x : orphan->key) key += (key.empty() ? "" : ",") + h.var_name(x);
    std::cerr << "orphan: " << h.name(orphan->relation) << " at position " << orphan->position + 1
              << "; no earlier relation contains its key {" << key << "}\n";
    return kExitDomain;
  }
  if (format == "dot") {
    std::cout << tree_to_dot(h, std::get<RootedTree>(result));
  } else {
    auto l = build_line_graph(h);
    std::cout << tree_to_json(h, std::get<RootedTree>(result), &l).dump(2) << '\n';
  }
  return 0;
}

AcyclicClass parse_class(const std::string& s) {
  if (s == "alpha") return AcyclicClass::kAlpha;
  if (s == "berge") return AcyclicClass::kBerge;
  if (s == "gamma") return AcyclicClass::kGamma;
  throw InputError("unknown class '" + s + "'");
}

bool report(const std::string& prefix, const std::vector<CheckResult>& checks) {
  bool ok = true;
  for (const auto& c : checks) {
    const char* tag = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
    std::cout << prefix << tag << ' ' << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << '\n';
    ok = ok && c.passed;
  }
  return ok;
}

int cmd_verify(const std::string& file, std::optional<std::uint64_t> seed, std::uint64_t count,
               const std::string& cls) {
  VerifyOptions options;
  options.oracle_max_nodes = env_guard("JOINTREE_ORACLE_MAX_NODES", options.oracle_max_nodes);
  options.plan_sweep_max_nodes = env_guard("JOINTREE_PLAN_SWEEP_MAX_NODES", options.plan_sweep_max_nodes);

  bool ok = true;
  if (!file.empty()) {
    auto h = load(file);
    for (const auto& part : connected_components(h)) ok = report("", verify_hypergraph(part, options)) && ok;
  }
  if (seed) {
    const auto c = parse_class(cls);
    for (std::uint64_t s = *seed; s < *seed + count; ++s) {
      auto h = random_acyclic_hypergraph(s, c);
      ok = report("seed " + std::to_string(s) + ": ", verify_hypergraph(h, options)) && ok;
    }
  }
  if (file.empty() && !seed) throw InputError("verify needs a file or --seed");
  return ok ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Join trees for acyclic conjunctive queries"};
  app.set_version_flag("--version", std::string("jointree ") + JOINTREE_VERSION);
  app.require_subcommand(1);

  std::string file;
  std::string root;
  std::string format;
  std::uint64_t limit = 0;
  std::string plan;
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 1;
  std::string cls = "alpha";
  bool gamma = false;
  std::function<int()> run;

  auto* classify = app.add_subcommand("classify", "Report alpha/linear/Berge/gamma acyclicity as JSON");
  classify->add_option("file", file, "Query file (JSON hypergraph or predicate text)")->required();
  classify->callback([&] { run = [&] { return cmd_classify(file); }; });

  auto* corpus = app.add_subcommand("corpus", "Summarise acyclicity over every file in a directory");
  corpus->add_option("dir", file, "Directory of query files")->required();
  corpus->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  corpus->callback([&] { run = [&] { return cmd_corpus(file, format); }; });

  auto* mcs = app.add_subcommand("mcs", "Join tree by maximum cardinality search");
  mcs->add_option("file", file, "Query file")->required();
  mcs->add_option("--root", root, "Root relation (default: largest)");
  mcs->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  mcs->callback([&] { run = [&] { return cmd_mcs(file, root, format); }; });

  auto* canonical = app.add_subcommand("canonical", "Shallowest join tree of a Berge-acyclic query");
  canonical->add_option("file", file, "Query file")->required();
  canonical->add_option("--root", root, "Root relation (default: largest)");
  canonical->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  canonical->callback([&] { run = [&] { return cmd_canonical(file, root, format); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate every join tree");
  enumerate->add_option("file", file, "Query file")->required();
  enumerate->add_option("--root", root, "Root of the starting MCS tree (default: largest)");
  enumerate->add_option("--limit", limit, "Stop after this many trees");
  enumerate->add_option("--format", format, "edits, trees, json or dot (equivalent graph)")
      ->check(CLI::IsMember({"edits", "trees", "json", "dot"}));
  enumerate->add_flag("--gamma", gamma, "Use the gamma-acyclic construction");
  enumerate->callback([&] {
    run = [&] {
      if (format.empty()) format = "edits";
      return cmd_enumerate(file, root, enumerate->count("--limit") ? limit : UINT64_MAX, format, gamma);
    };
  });

  auto* convert = app.add_subcommand("convert-plan", "Convert a left-deep plan into a join tree");
  convert->add_option("file", file, "Query file")->required();
  convert->add_option("--plan", plan, "Comma-separated relation names, e.g. R3,R1,R2")->required();
  convert->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  convert->callback([&] { run = [&] { return cmd_convert_plan(file, plan, format); }; });

  auto* verify = app.add_subcommand("verify", "Check the algorithms against brute force");
  verify->add_option("file", file, "Query file");
  verify->add_option("--seed", seed, "First seed of a random corpus");
  verify->add_option("--count", count, "Number of seeds")->check(CLI::PositiveNumber);
  verify->add_option("--class", cls, "alpha, berge or gamma")->check(CLI::IsMember({"alpha", "berge", "gamma"}));
  verify->callback([&] { run = [&] { return cmd_verify(file, seed, count, cls); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return run();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
