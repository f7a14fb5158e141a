#include "jointree/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "jointree/errors.hpp"
#include "union_find.hpp"

namespace jointree {

Hypergraph::Hypergraph(const std::vector<RelationSpec>& relations) {
  std::unordered_map<std::string, VarId> var_index;
  std::unordered_map<std::string, RelId> rel_index;
  for (const auto& spec : relations) {
    if (spec.vars.empty()) {
      throw InputError("relation '" + spec.name + "' has an empty hyperedge");
    }
    RelId r(relation_names_.size());
    if (!rel_index.emplace(spec.name, r).second) {
      throw InputError("relation '" + spec.name + "' is declared twice");
    }
    relation_names_.push_back(spec.name);
    std::vector<VarId> edge;
    edge.reserve(spec.vars.size());
    for (const auto& v : spec.vars) {
      auto [it, inserted] = var_index.emplace(v, VarId(var_names_.size()));
      if (inserted) var_names_.push_back(v);
      edge.push_back(it->second);
    }
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    chi_.push_back(std::move(edge));
  }
  index_occurrences();
}

Hypergraph::Hypergraph(std::vector<std::string> relation_names, std::vector<std::string> var_names,
                       std::vector<std::vector<VarId>> chi)
    : relation_names_(std::move(relation_names)),
      var_names_(std::move(var_names)),
      chi_(std::move(chi)) {
  if (relation_names_.size() != chi_.size()) {
    throw InputError("relation name count does not match hyperedge count");
  }
  for (std::size_t r = 0; r < chi_.size(); ++r) {
    auto& edge = chi_[r];
    if (edge.empty()) {
      throw InputError("relation '" + relation_names_[r] + "' has an empty hyperedge");
    }
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (edge.back().index() >= var_names_.size()) {
      throw InputError("relation '" + relation_names_[r] + "' references an unknown variable");
    }
  }
  index_occurrences();
  for (std::size_t x = 0; x < occurrences_.size(); ++x) {
    if (occurrences_[x].empty()) {
      throw InputError("variable '" + var_names_[x] + "' occurs in no relation");
    }
  }
}

void Hypergraph::index_occurrences() {
  occurrences_.assign(var_names_.size(), {});
  for (std::size_t r = 0; r < chi_.size(); ++r) {
    for (VarId x : chi_[r]) occurrences_[x.index()].push_back(RelId(r));
  }
}

std::size_t Hypergraph::size() const {
  std::size_t total = 0;
  for (const auto& e : chi_) total += e.size();
  return total;
}

bool Hypergraph::contains(RelId r, VarId x) const {
  const auto& e = chi_[r.index()];
  return std::binary_search(e.begin(), e.end(), x);
}

std::vector<VarId> Hypergraph::intersection(RelId a, RelId b) const {
  const auto& ea = chi_[a.index()];
  const auto& eb = chi_[b.index()];
  std::vector<VarId> out;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out));
  return out;
}

std::size_t Hypergraph::intersection_size(RelId a, RelId b) const {
  const auto& ea = chi_[a.index()];
  const auto& eb = chi_[b.index()];
  std::size_t n = 0;
  auto i = ea.begin();
  auto j = eb.begin();
  while (i != ea.end() && j != eb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::optional<RelId> Hypergraph::find_relation(std::string_view name) const {
  for (std::size_t r = 0; r < relation_names_.size(); ++r) {
    if (relation_names_[r] == name) return RelId(r);
  }
  return std::nullopt;
}

std::optional<VarId> Hypergraph::find_var(std::string_view name) const {
  for (std::size_t x = 0; x < var_names_.size(); ++x) {
    if (var_names_[x] == name) return VarId(x);
  }
  return std::nullopt;
}

std::vector<RelId> Hypergraph::relations() const {
  std::vector<RelId> out;
  out.reserve(chi_.size());
  for (std::size_t r = 0; r < chi_.size(); ++r) out.emplace_back(r);
  return out;
}

MergeResult merge_duplicate_edges(const Hypergraph& h) {
  std::map<std::vector<VarId>, RelId> first_seen;
  std::vector<std::string> names;
  std::vector<std::vector<VarId>> chi;
  std::vector<std::string> warnings;
  for (RelId r : h.relations()) {
    std::vector<VarId> edge(h.chi(r).begin(), h.chi(r).end());
    auto [it, inserted] = first_seen.emplace(edge, r);
    if (!inserted) {
      warnings.push_back("relation '" + h.name(r) + "' has the same variables as '" +
                         h.name(it->second) + "'; merged");
      continue;
    }
    names.push_back(h.name(r));
    chi.push_back(std::move(edge));
  }
  return {Hypergraph(std::move(names), h.var_names(), std::move(chi)), std::move(warnings)};
}

namespace {

// Union-find over relations, joined through shared variables.
std::vector<std::size_t> component_labels(const Hypergraph& h) {
  detail::UnionFind uf(h.num_relations());
  for (std::size_t x = 0; x < h.num_vars(); ++x) {
    auto rels = h.relations_with(VarId(x));
    for (std::size_t k = 1; k < rels.size(); ++k) uf.unite(rels[0].index(), rels[k].index());
  }
  std::vector<std::size_t> label(h.num_relations());
  for (std::size_t r = 0; r < label.size(); ++r) label[r] = uf.find(r);
  return label;
}

}  // namespace

bool is_connected(const Hypergraph& h) {
  auto label = component_labels(h);
  return std::all_of(label.begin(), label.end(), [&](std::size_t l) { return l == label[0]; });
}

std::vector<Hypergraph> connected_components(const Hypergraph& h) {
  auto label = component_labels(h);
  std::vector<std::size_t> roots;
  for (std::size_t r = 0; r < label.size(); ++r) {
    if (label[r] == r) roots.push_back(r);
  }
  std::vector<Hypergraph> out;
  out.reserve(roots.size());
  for (std::size_t root : roots) {
    std::vector<std::string> names;
    std::vector<std::vector<VarId>> chi;
    std::vector<std::string> var_names;
    std::unordered_map<std::uint32_t, VarId> remap;
    for (std::size_t r = 0; r < label.size(); ++r) {
      if (label[r] != root) continue;
      names.push_back(h.name(RelId(r)));
      std::vector<VarId> edge;
      for (VarId x : h.chi(RelId(r))) {
        auto [it, inserted] = remap.emplace(x.value(), VarId(var_names.size()));
        if (inserted) var_names.push_back(h.var_name(x));
        edge.push_back(it->second);
      }
      chi.push_back(std::move(edge));
    }
    out.emplace_back(std::move(names), std::move(var_names), std::move(chi));
  }
  return out;
}

RelId largest_relation(const Hypergraph& h) {
  if (h.empty()) throw InputError("hypergraph has no relations");
  RelId best(0);
  for (RelId r : h.relations()) {
    if (h.chi(r).size() > h.chi(best).size()) best = r;
  }
  return best;
}

}  // namespace jointree
