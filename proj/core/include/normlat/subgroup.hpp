#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "normlat/group.hpp"

namespace normlat {

/// A subgroup of a parent group, canonicalized as a sorted list of element
/// ids. Producers guarantee closure; is_subgroup re-checks when data comes
/// from outside.
struct Subgroup {
  std::uint32_t parent_order = 0;
  std::vector<elem> members;  // sorted ascending, no duplicates

  std::uint32_t order() const { return static_cast<std::uint32_t>(members.size()); }

  bool contains(elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }

  bool is_subset_of(const Subgroup& other) const {
    return std::includes(other.members.begin(), other.members.end(),
                         members.begin(), members.end());
  }

  bool operator==(const Subgroup&) const = default;
};

/// Canonical lattice order: by order, then lexicographically by member list.
inline bool lattice_less(const Subgroup& a, const Subgroup& b) {
  if (a.members.size() != b.members.size())
    return a.members.size() < b.members.size();
  return a.members < b.members;
}

/// True iff the ids form a subgroup of g (identity, closure, inverses).
bool is_subgroup(const Group& g, std::span<const elem> members);

}  // namespace normlat
