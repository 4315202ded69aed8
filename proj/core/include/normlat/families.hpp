#pragma once

#include <cstdint>

#include "normlat/group.hpp"
#include "normlat/subgroup.hpp"

namespace normlat {

/// Z_n on ids 0..n-1 with table[i][j] = (i+j) mod n. Label "Z_n".
Group cyclic(std::uint32_t n);

/// Direct power of Z_p of the given rank, order p^rank. Element ids are the
/// base-p digit vectors of the coordinates: id = sum_k c_k p^k. Label "E_p^r".
Group elementary_abelian(std::uint64_t p, unsigned rank);

/// Dihedral group of order 2m, m >= 3: <r, s | r^m = s^2 = 1, r^s = r^-1>.
/// Element (r^i s^eps) has id i + eps*m. Label "D_{2m}".
Group dihedral(std::uint32_t m);

/// All n! permutations of 0..n-1 in lexicographic order of their one-line
/// notation, composed as (p*q)(x) = p(q(x)). n <= 6. Label "S_n".
Group symmetric(unsigned n);

/// Componentwise product on pairs; id of (a, b) is a*|H| + b.
/// Label "<G>x<H>".
Group direct_product(const Group& g, const Group& h);

/// Parameters of the metacyclic presentation
///   <x, y | x^k = y^l, y^m = 1, y^x = y^n>
/// admissible when m | n^k - 1 and m | l(n - 1).
struct MetacyclicParams {
  std::uint64_t k = 1, l = 1, m = 1, n = 1;
};

/// Group of order k*m on normal forms x^i y^j (0 <= i < k, 0 <= j < m),
/// id = i*m + j, multiplied by
///   x^i y^j * x^a y^b = x^(i+a) y^(j n^a + b),
/// reducing x^(k+t) to x^t y^l. The constructed table is re-validated against
/// the group axioms and rejected if inconsistent.
Group metacyclic(const MetacyclicParams& params);

/// Split case l = m (so x^k = 1): the semidirect product Z_m x| Z_k with
/// y^x = y^n. Requires n^k = 1 (mod m).
Group metacyclic_split(std::uint64_t k, std::uint64_t m, std::uint64_t n);

/// Parameters of the nonabelian semidirect product with elementary abelian
/// base: rank n-1 base of exponent p, extended by an order-q power
/// automorphism. Requires p odd prime, q prime, q | p - 1, n >= 2.
struct PGroupParams {
  unsigned n = 2;
  std::uint64_t p = 3;
  std::uint64_t q = 2;
};

/// Order p^(n-1) * q. The base H = E_p^(n-1) occupies ids 0..p^(n-1)-1
/// (digit-vector layout as in elementary_abelian); element (h, z^s) has id
/// s*p^(n-1) + h. The generator z acts by h -> h^t where t is the smallest
/// integer > 1 of multiplicative order q mod p. Label "P(n,p,q=q)".
Group pgroup_nonabelian(const PGroupParams& params);

/// Group on the cosets of a normal subgroup, multiplied via representatives
/// (the smallest id of each coset). Cosets are numbered by their smallest
/// member, ascending, so the coset of the identity need not be id 0 unless
/// the identity is element 0. Rejects non-normal n.
Group quotient(const Group& g, const Subgroup& n);

}  // namespace normlat
