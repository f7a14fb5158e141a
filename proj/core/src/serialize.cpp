#include "jointree/serialize.hpp"

#include <charconv>
#include <sstream>

#include "jointree/errors.hpp"

namespace jointree {

namespace {

Json names(const Hypergraph& h, std::span<const VarId> vars) {
  Json out = Json::array();
  for (VarId x : vars) out.push_back(h.var_name(x));
  return out;
}

Json witness_to_json(const Hypergraph& h, const CycleWitness& w) {
  Json rels = Json::array();
  for (RelId r : w.relations) rels.push_back(h.name(r));
  return Json{{"relations", rels}, {"variables", names(h, w.vars)}};
}

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string var_label(const Hypergraph& h, std::span<const VarId> vars) {
  std::string out;
  for (VarId x : vars) {
    if (!out.empty()) out += ",";
    out += h.var_name(x);
  }
  return out;
}

RelId relation_named(const Hypergraph& h, const Json& value) {
  if (!value.is_string()) throw InputError("tree JSON: relation names must be strings");
  auto r = h.find_relation(value.get<std::string>());
  if (!r) throw InputError("tree JSON: unknown relation '" + value.get<std::string>() + "'");
  return *r;
}

}  // namespace

std::string edge_name(EdgeId e) { return "e" + std::to_string(e.value()); }

EdgeId parse_edge_name(std::string_view text) {
  std::uint32_t v = 0;
  if (text.size() < 2 || text[0] != 'e') throw InputError("bad edge id '" + std::string(text) + "'");
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad edge id '" + std::string(text) + "'");
  }
  return EdgeId(v);
}

Json hypergraph_to_json(const Hypergraph& h) {
  Json rels = Json::object();
  for (RelId r : h.relations()) rels[h.name(r)] = names(h, h.chi(r));
  return Json{{"relations", rels}};
}

Json classification_to_json(const Hypergraph& h, const Classification& c) {
  Json out;
  out["alpha"] = c.alpha;
  out["linear"] = c.linear;
  out["berge"] = c.berge;
  if (c.gamma == Tristate::kUnknown) {
    out["gamma"] = "unknown";
  } else {
    out["gamma"] = c.gamma == Tristate::kTrue;
  }
  if (c.gamma_cycle_witness) out["gamma_cycle"] = witness_to_json(h, *c.gamma_cycle_witness);
  if (c.berge_cycle_witness) out["berge_cycle"] = witness_to_json(h, *c.berge_cycle_witness);
  return out;
}

Json tree_to_json(const Hypergraph& h, const RootedTree& t, const LineGraph* l) {
  Json edges = Json::array();
  for (auto [p, c] : t.edges()) {
    Json e;
    if (l != nullptr) {
      auto id = l->find_edge(p, c);
      if (!id) throw InputError("tree edge is not an edge of the line graph");
      e["id"] = edge_name(*id);
    }
    e["parent"] = h.name(p);
    e["child"] = h.name(c);
    e["weight"] = t.link(c)->weight;
    e["shared"] = names(h, t.link(c)->label);
    edges.push_back(std::move(e));
  }
  return Json{{"root", h.name(t.root())}, {"weight", t.total_weight()}, {"edges", edges}};
}

RootedTree tree_from_json(const Hypergraph& h, const Json& doc) {
  if (!doc.is_object() || !doc.contains("root") || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw InputError("tree JSON needs \"root\" and an \"edges\" array");
  }
  RelId root = relation_named(h, doc["root"]);
  std::vector<std::pair<RelId, RelId>> pairs;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("parent") || !e.contains("child")) {
      throw InputError("tree JSON edges need \"parent\" and \"child\"");
    }
    pairs.emplace_back(relation_named(h, e["parent"]), relation_named(h, e["child"]));
  }
  return tree_from_edges(h, root, pairs);
}

Json equivalent_graph_to_json(const Hypergraph& h, const LineGraph& l, const EquivalentGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    const auto& orig = l.edge(e.id);
    edges.push_back(Json{{"id", edge_name(e.id)},
                         {"a", h.name(e.a)},
                         {"b", h.name(e.b)},
                         {"weight", e.weight},
                         {"original", {h.name(orig.a), h.name(orig.b)}}});
  }
  Json deleted = Json::array();
  for (EdgeId id : g.deleted()) deleted.push_back(edge_name(id));
  return Json{{"edges", edges}, {"deleted", deleted}};
}

std::string tree_to_dot(const Hypergraph& h, const RootedTree& t, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (RelId r : t.bfs_order()) out << "  " << dot_id(h.name(r)) << ";\n";
  for (auto [p, c] : t.edges()) {
    out << "  " << dot_id(h.name(p)) << " -- " << dot_id(h.name(c))
        << " [label=" << dot_id(var_label(h, t.link(c)->label)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string equivalent_graph_to_dot(const Hypergraph& h, const LineGraph& l, const EquivalentGraph& g,
                                    std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (RelId r : h.relations()) out << "  " << dot_id(h.name(r)) << ";\n";
  for (const auto& e : g.edges()) {
    auto shared = h.intersection(l.edge(e.id).a, l.edge(e.id).b);
    out << "  " << dot_id(h.name(e.a)) << " -- " << dot_id(h.name(e.b))
        << " [label=" << dot_id(edge_name(e.id) + ": " + var_label(h, shared)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_edge_list(std::span<const EdgeId> ids) {
  std::string out;
  for (EdgeId id : ids) {
    if (!out.empty()) out += ' ';
    out += edge_name(id);
  }
  return out;
}

std::string format_tree_line(std::span<const EdgeId> ids) {
  return ids.empty() ? "TREE" : "TREE " + format_edge_list(ids);
}

std::string format_edit_line(const Edit& edit) {
  return "SWAP +" + edge_name(edit.add) + " -" + edge_name(edit.remove);
}

}  // namespace jointree
