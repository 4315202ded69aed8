#include "normlat/group.hpp"

#include <random>
#include <stdexcept>

namespace normlat {

namespace {

[[noreturn]] void reject(const std::string& label, const std::string& why) {
  throw std::invalid_argument("group '" + label + "': " + why);
}

}  // namespace

Group::Group(std::uint32_t order, std::vector<elem> table, std::string label,
             const ValidateOptions& opts)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  if (order_ == 0) reject(label_, "order must be positive");
  if (order_ > opts.max_order)
    reject(label_, "order " + std::to_string(order_) +
                       " exceeds the dense-table guard (" +
                       std::to_string(opts.max_order) + ")");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    reject(label_, "table size does not match order");
  for (elem x : table_)
    if (x >= order_) reject(label_, "table entry out of range");

  // Latin square: every row and column is a permutation of 0..N-1.
  std::vector<char> seen(order_);
  for (std::uint32_t i = 0; i < order_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t j = 0; j < order_; ++j) {
      elem v = op(i, j);
      if (seen[v]) reject(label_, "row " + std::to_string(i) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::uint32_t j = 0; j < order_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t i = 0; i < order_; ++i) {
      elem v = op(i, j);
      if (seen[v]) reject(label_, "column " + std::to_string(j) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }

  // Two-sided identity.
  bool found = false;
  for (std::uint32_t e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t j = 0; j < order_ && ok; ++j)
      ok = op(e, j) == j && op(j, e) == j;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) reject(label_, "no two-sided identity");

  // Two-sided inverses.
  inverses_.resize(order_);
  for (std::uint32_t i = 0; i < order_; ++i) {
    bool ok = false;
    for (std::uint32_t j = 0; j < order_; ++j) {
      if (op(i, j) == identity_) {
        if (op(j, i) != identity_)
          reject(label_, "element " + std::to_string(i) + " has only a one-sided inverse");
        inverses_[i] = j;
        ok = true;
        break;
      }
    }
    if (!ok) reject(label_, "element " + std::to_string(i) + " has no inverse");
  }

  // Associativity: exhaustive up to the cap, sampled above it.
  auto check_triple = [&](elem a, elem b, elem c) {
    if (op(op(a, b), c) != op(a, op(b, c)))
      reject(label_, "associativity fails at (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (order_ <= opts.full_assoc_cap) {
    for (std::uint32_t a = 0; a < order_; ++a) {
      const elem* row_a = table_.data() + static_cast<std::size_t>(a) * order_;
      for (std::uint32_t b = 0; b < order_; ++b) {
        const elem ab = row_a[b];
        const elem* row_ab = table_.data() + static_cast<std::size_t>(ab) * order_;
        const elem* row_b = table_.data() + static_cast<std::size_t>(b) * order_;
        for (std::uint32_t c = 0; c < order_; ++c) {
          if (row_ab[c] != row_a[row_b[c]]) check_triple(a, b, c);
        }
      }
    }
  } else {
    std::mt19937_64 rng(opts.sample_seed ^ order_);
    std::uniform_int_distribution<std::uint32_t> pick(0, order_ - 1);
    for (std::size_t s = 0; s < opts.assoc_samples; ++s)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
}

Group Group::with_label(std::string label) const {
  Group g = *this;
  g.label_ = std::move(label);
  return g;
}

std::uint32_t element_order(const Group& g, elem x) {
  if (x >= g.order()) throw std::invalid_argument("element_order: id out of range");
  std::uint32_t n = 1;
  elem y = x;
  while (y != g.identity()) {
    y = g.op(y, x);
    ++n;
  }
  return n;
}

bool is_abelian(const Group& g) {
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = a + 1; b < g.order(); ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

bool is_cyclic(const Group& g) {
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

}  // namespace normlat
