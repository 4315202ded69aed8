#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "normlat/group.hpp"
#include "normlat/subgroup.hpp"

namespace normlat {

/// Enumeration caps. Exceeding a cap is a loud refusal (CapExceeded), never a
/// silent truncation: a partial lattice would corrupt every value computed
/// from it.
struct EnumLimits {
  std::uint32_t full_cap = 400;    // all_subgroups
  std::uint32_t normal_cap = 5000; // normal_subgroups
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, std::uint32_t cap, std::uint32_t order)
      : std::runtime_error("group of order " + std::to_string(order) +
                           " exceeds " + cap_name + " = " + std::to_string(cap)),
        cap_name_(std::move(cap_name)),
        cap_(cap),
        order_(order) {}

  const std::string& cap_name() const { return cap_name_; }
  std::uint32_t cap() const { return cap_; }
  std::uint32_t order() const { return order_; }

 private:
  std::string cap_name_;
  std::uint32_t cap_;
  std::uint32_t order_;
};

enum class LatticeKind { full, cyclic, normal };

/// A deduplicated family of subgroups in canonical order
/// (by order, then lexicographic member list).
struct LatticeSummary {
  LatticeKind kind = LatticeKind::full;
  std::vector<Subgroup> subgroups;

  /// Subgroup orders, ascending (with multiplicity).
  std::vector<std::uint32_t> orders() const;

  /// Exact sum of subgroup orders.
  mpz_class order_sum() const;
};

/// Least subgroup containing the seed ids. An empty seed yields the trivial
/// subgroup.
Subgroup generated_subgroup(const Group& g, std::span<const elem> seed);

/// {<x> : x in G}, deduplicated. Always contains the trivial subgroup.
LatticeSummary cyclic_subgroups(const Group& g);

/// Every subgroup of g, computed by seeding with the cyclic subgroups and
/// closing under pairwise join until fixpoint. Throws CapExceeded above
/// limits.full_cap.
LatticeSummary all_subgroups(const Group& g, const EnumLimits& limits = {});

/// Orbits of the conjugation action, each sorted, ordered by smallest member.
std::vector<std::vector<elem>> conjugacy_classes(const Group& g);

/// Every normal subgroup of g, computed as the fixpoint of the family
/// closed under "subgroup generated by (member u one conjugacy class)"
/// starting from the trivial subgroup. Every normal subgroup is a union of
/// conjugacy classes, so the generated subgroups stay normal and the fixpoint
/// is exactly N(G). Scales past full_cap; throws CapExceeded above
/// limits.normal_cap.
LatticeSummary normal_subgroups(const Group& g, const EnumLimits& limits = {});

/// True iff g h g^-1 = h for all g (elementwise conjugation stability).
bool is_normal(const Group& g, const Subgroup& h);

/// True iff the normal subgroups are totally ordered by inclusion.
bool normal_lattice_is_chain(const Group& g, const EnumLimits& limits = {});

/// True iff no two normal subgroups share an order.
bool normal_order_map_injective(const Group& g, const EnumLimits& limits = {});

}  // namespace normlat
