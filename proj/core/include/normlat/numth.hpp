#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace normlat {

/// Arithmetic class of a positive integer by its divisor sum:
/// deficient if sigma(n) < 2n, perfect if sigma(n) = 2n, abundant otherwise.
enum class NumberClass { deficient, perfect, abundant };

const char* to_string(NumberClass c);

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
/// Trial division; fine at the scale this library targets.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// All divisors of n, ascending. Rejects n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Sum of all divisors of n, exact. Rejects n = 0.
mpz_class sigma_divisors(std::uint64_t n);

/// NumberClass of n per sigma_divisors. n = 1 is deficient (sigma(1) = 1 < 2).
NumberClass classify_number(std::uint64_t n);

/// Gaussian binomial [n choose k]_p: the number of k-dimensional subspaces
/// of an n-dimensional vector space over the p-element field,
/// prod_{i=0..k-1} (p^(n-i) - 1) / (p^(k-i) - 1).
/// Every intermediate quotient is an exact integer; divisibility is asserted
/// at each step. Rejects k > n.
mpz_class gaussian_binomial(unsigned n, unsigned k, std::uint64_t p);

/// Subgroup counts of the elementary abelian group of order p^rank.
///
/// counts[k] is the number of subgroups of order p^k for k = 0..rank, built
/// from the recurrence
///     a_r(k) = a_{r-1}(k) + p^(r-k) * a_{r-1}(k-1),      a_0(0) = 1.
/// total is sum_k counts[k]; weighted is sum_k p^k * counts[k], maintained by
/// the running recurrence x_r = x_{r-1} + p^r * a_{r-1}.
///
/// The table is indexed by the rank of the group itself: count_table(p, r)
/// describes the group of order p^r.
struct CountTable {
  std::uint64_t p = 0;
  unsigned rank = 0;
  std::vector<mpz_class> counts;
  mpz_class total;
  mpz_class weighted;
};

CountTable count_table(std::uint64_t p, unsigned rank);

}  // namespace normlat
