#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace normlat {

/// Element id inside one group's multiplication table.
using elem = std::uint32_t;

/// Construction-time validation policy for Group tables.
///
/// Associativity is checked exhaustively for orders up to full_assoc_cap and
/// by deterministic random sampling of assoc_samples triples above it. The
/// dense-table guard refuses tables whose memory footprint would be absurd
/// for a desk-scale tool.
struct ValidateOptions {
  std::uint32_t full_assoc_cap = 512;
  std::size_t assoc_samples = 1'000'000;
  std::uint64_t sample_seed = 0x5eedcafe;
  std::uint32_t max_order = 8192;
};

/// A finite group as an immutable, fully validated multiplication table over
/// element ids 0..N-1.
///
/// On construction the table is checked to be a Latin square with a two-sided
/// identity, two-sided inverses, and an associative product (see
/// ValidateOptions). Invalid tables are rejected with std::invalid_argument.
class Group {
 public:
  Group(std::uint32_t order, std::vector<elem> table, std::string label,
        const ValidateOptions& opts = {});

  std::uint32_t order() const { return order_; }

  /// Product of a and b (row a, column b).
  elem op(elem a, elem b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  elem identity() const { return identity_; }
  elem inverse(elem a) const { return inverses_[a]; }

  /// g x g^-1.
  elem conjugate(elem g, elem x) const { return op(op(g, x), inverse(g)); }

  const std::string& label() const { return label_; }
  std::span<const elem> table() const { return table_; }

  /// Copy of this group carrying a different label (tables are shared values).
  Group with_label(std::string label) const;

 private:
  std::uint32_t order_;
  std::vector<elem> table_;
  std::string label_;
  elem identity_ = 0;
  std::vector<elem> inverses_;
};

/// Least e >= 1 with g^e = identity. Divides the group order.
std::uint32_t element_order(const Group& g, elem x);

bool is_abelian(const Group& g);

/// True iff some element generates the whole group.
bool is_cyclic(const Group& g);

}  // namespace normlat
