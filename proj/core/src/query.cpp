#include "jointree/query.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "jointree/errors.hpp"

namespace jointree {

PredicateSet normalize(std::vector<Predicate> preds) {
  for (auto& p : preds) {
    if (p.a == 0 || p.i == 0 || p.b == 0 || p.j == 0) {
      throw InputError("relation and attribute numbers start at 1");
    }
    if (p.a == p.b) {
      throw InputError("self-join on R" + std::to_string(p.a) + " is not supported");
    }
    if (std::pair(p.b, p.j) < std::pair(p.a, p.i)) {
      std::swap(p.a, p.b);
      std::swap(p.i, p.j);
    }
  }
  std::sort(preds.begin(), preds.end());
  preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
  return preds;
}

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) {
      throw ParseError(line_, std::string("expected '") + c + "' in \"" + std::string(s_) + "\"");
    }
    ++pos_;
  }

  std::uint32_t number() {
    skip_space();
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == s_.data() + pos_) {
      throw ParseError(line_, "expected a number in \"" + std::string(s_) + "\"");
    }
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  void relation_prefix() {
    skip_space();
    if (pos_ < s_.size() && (s_[pos_] == 'R' || s_[pos_] == 'r')) {
      ++pos_;
      return;
    }
    throw ParseError(line_, "expected 'R<relation>' in \"" + std::string(s_) + "\"");
  }

  void finish() {
    skip_space();
    if (pos_ != s_.size()) {
      throw ParseError(line_, "trailing characters in \"" + std::string(s_) + "\"");
    }
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

PredicateSet parse_query(std::string_view text) {
  std::vector<Predicate> preds;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    LineScanner scan(line, line_no);
    Predicate p;
    scan.relation_prefix();
    p.a = scan.number();
    scan.expect('.');
    p.i = scan.number();
    scan.expect('=');
    scan.relation_prefix();
    p.b = scan.number();
    scan.expect('.');
    p.j = scan.number();
    scan.finish();
    if (p.a == p.b) throw ParseError(line_no, "self-join on R" + std::to_string(p.a));
    if (p.a == 0 || p.i == 0 || p.b == 0 || p.j == 0) {
      throw ParseError(line_no, "relation and attribute numbers start at 1");
    }
    preds.push_back(p);
  }
  return normalize(std::move(preds));
}

Hypergraph build_hypergraph(const PredicateSet& preds) {
  if (preds.empty()) throw InputError("query has no join predicates");

  // Dense numbering of relation attributes; stands in for a perfect hash f(a, i).
  std::unordered_map<std::uint64_t, std::uint32_t> slot;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> attribute;
  auto key = [](std::uint32_t a, std::uint32_t i) {
    return (static_cast<std::uint64_t>(a) << 32) | i;
  };
  auto intern = [&](std::uint32_t a, std::uint32_t i) {
    auto [it, inserted] = slot.emplace(key(a, i), static_cast<std::uint32_t>(attribute.size()));
    if (inserted) attribute.emplace_back(a, i);
    return it->second;
  };

  // Predicate graph as adjacency lists.
  std::vector<std::vector<std::uint32_t>> adj;
  for (const auto& p : preds) {
    auto u = intern(p.a, p.i);
    auto v = intern(p.b, p.j);
    adj.resize(attribute.size());
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // Connected components by iterative DFS.
  constexpr std::uint32_t kUnseen = ~0u;
  std::vector<std::uint32_t> comp(attribute.size(), kUnseen);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> comp_min;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < attribute.size(); ++s) {
    if (comp[s] != kUnseen) continue;
    auto c = static_cast<std::uint32_t>(comp_min.size());
    comp_min.push_back(attribute[s]);
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      comp_min[c] = std::min(comp_min[c], attribute[u]);
      for (auto v : adj[u]) {
        if (comp[v] == kUnseen) {
          comp[v] = c;
          stack.push_back(v);
        }
      }
    }
  }

  // Variable ids ordered by the smallest attribute of their component.
  std::vector<std::uint32_t> order(comp_min.size());
  for (std::uint32_t c = 0; c < order.size(); ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](auto x, auto y) { return comp_min[x] < comp_min[y]; });
  std::vector<VarId> var_of(comp_min.size());
  std::vector<std::string> var_names(comp_min.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    var_of[order[k]] = VarId(k);
    var_names[k] = "v" + std::to_string(k + 1);
  }

  std::map<std::uint32_t, std::vector<VarId>> edges;
  for (std::uint32_t s = 0; s < attribute.size(); ++s) {
    edges[attribute[s].first].push_back(var_of[comp[s]]);
  }
  std::vector<std::string> names;
  std::vector<std::vector<VarId>> chi;
  for (auto& [a, vars] : edges) {
    names.push_back("R" + std::to_string(a));
    chi.push_back(std::move(vars));
  }
  return Hypergraph(std::move(names), std::move(var_names), std::move(chi));
}

LoadedQuery hypergraph_from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("relations") || !doc["relations"].is_object()) {
    throw InputError("expected an object with a \"relations\" object");
  }
  const auto& rels = doc["relations"];
  if (rels.empty()) throw InputError("\"relations\" is empty");

  std::vector<Hypergraph::RelationSpec> specs;
  for (const auto& [name, vars] : rels.items()) {
    if (!vars.is_array()) throw InputError("relation '" + name + "' must map to an array");
    Hypergraph::RelationSpec spec{name, {}};
    for (const auto& v : vars) {
      if (!v.is_string()) throw InputError("relation '" + name + "' has a non-string variable");
      spec.vars.push_back(v.get<std::string>());
    }
    if (spec.vars.empty()) throw InputError("relation '" + name + "' has an empty hyperedge");
    specs.push_back(std::move(spec));
  }
  auto merged = merge_duplicate_edges(Hypergraph(specs));
  return {std::move(merged.hypergraph), std::move(merged.warnings)};
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

LoadedQuery hypergraph_from_file(const std::filesystem::path& path) {
  return hypergraph_from_json(slurp(path));
}

LoadedQuery load_query_file(const std::filesystem::path& path) {
  auto text = slurp(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return hypergraph_from_json(text);
  return {build_hypergraph(parse_query(text)), {}};
}

}  // namespace jointree
