#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

namespace jointree {

/// Dense integer handle tagged with the kind of object it names.
///
/// All ids in this library index into a vector owned by the object that issued
/// them (a Hypergraph issues RelId and VarId, a LineGraph issues EdgeId).
template <typename Tag>
class Id {
 public:
  using value_type = std::uint32_t;

  constexpr Id() = default;
  constexpr explicit Id(value_type v) : v_(v) {}
  constexpr explicit Id(std::size_t v) : v_(static_cast<value_type>(v)) {}
  constexpr explicit Id(int v) : v_(static_cast<value_type>(v)) {}

  constexpr value_type value() const { return v_; }
  constexpr std::size_t index() const { return v_; }
  constexpr bool valid() const { return v_ != kInvalid; }

  friend constexpr auto operator<=>(Id, Id) = default;

  static constexpr Id invalid() { return Id(kInvalid); }

 private:
  static constexpr value_type kInvalid = std::numeric_limits<value_type>::max();
  value_type v_ = kInvalid;
};

struct RelTag;
struct VarTag;
struct EdgeTag;

/// A hyperedge, i.e. one relation of the query.
using RelId = Id<RelTag>;
/// A vertex of the hypergraph, i.e. one query variable (attribute equivalence class).
using VarId = Id<VarTag>;
/// A line-graph edge. Stable across sliding: an equivalent graph edge keeps the id
/// of the line-graph edge it came from.
using EdgeId = Id<EdgeTag>;

}  // namespace jointree

template <typename Tag>
struct std::hash<jointree::Id<Tag>> {
  std::size_t operator()(jointree::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};
