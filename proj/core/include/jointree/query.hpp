#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "jointree/hypergraph.hpp"

namespace jointree {

/// Equi-join predicate R<a>.<i> = R<b>.<j>. Stored with (a, i) < (b, j).
struct Predicate {
  std::uint32_t a = 0;
  std::uint32_t i = 0;
  std::uint32_t b = 0;
  std::uint32_t j = 0;

  friend auto operator<=>(const Predicate&, const Predicate&) = default;
};

/// Sorted, duplicate-free, orientation-normalised predicates.
using PredicateSet = std::vector<Predicate>;

/// Orients and deduplicates. Throws InputError on a self-join or a zero id.
PredicateSet normalize(std::vector<Predicate> preds);

/// Parses one predicate per line (`R1.2=R3.1`). Blank lines and lines starting
/// with `#` are skipped. Throws ParseError carrying the offending line number.
PredicateSet parse_query(std::string_view text);

/// Query hypergraph: one variable per connected component of the predicate graph
/// over relation attributes. Variables are numbered by the smallest (relation,
/// attribute) pair of their component and named v1, v2, ...; relations are named
/// R<a> and ordered by a. Attributes outside every predicate produce no vertex.
/// Relations with identical vertex sets are kept as distinct hyperedges.
Hypergraph build_hypergraph(const PredicateSet& preds);

struct LoadedQuery {
  Hypergraph hypergraph;
  std::vector<std::string> warnings;
};

/// Parses the JSON format `{"relations": {"R1": ["a", "b"], ...}}`.
/// Relations keep document order; duplicate hyperedges are merged with a warning.
LoadedQuery hypergraph_from_json(std::string_view text);

/// Loads a JSON hypergraph file.
LoadedQuery hypergraph_from_file(const std::filesystem::path& path);

/// Loads either format: JSON when the first non-blank character is `{`,
/// predicate text otherwise.
LoadedQuery load_query_file(const std::filesystem::path& path);

}  // namespace jointree
