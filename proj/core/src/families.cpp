#include "normlat/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "normlat/lattice.hpp"
#include "normlat/numth.hpp"

namespace normlat {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint32_t checked_order(std::uint64_t n, const char* what) {
  if (n == 0 || n > (std::uint64_t(1) << 31))
    throw std::invalid_argument(std::string(what) + ": order out of range");
  return static_cast<std::uint32_t>(n);
}

}  // namespace

Group cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: n must be positive");
  std::vector<elem> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      t[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return Group(n, std::move(t), "Z_" + std::to_string(n));
}

Group elementary_abelian(std::uint64_t p, unsigned rank) {
  if (!is_prime(p)) throw std::invalid_argument("elementary_abelian: p must be prime");
  std::uint64_t n64 = 1;
  for (unsigned i = 0; i < rank; ++i) n64 *= p;
  const std::uint32_t n = checked_order(n64, "elementary_abelian");
  const std::uint32_t pp = static_cast<std::uint32_t>(p);
  std::vector<elem> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t x = a, y = b, sum = 0, mul = 1;
      for (unsigned k = 0; k < rank; ++k) {
        sum += ((x % pp) + (y % pp)) % pp * mul;
        x /= pp;
        y /= pp;
        mul *= pp;
      }
      t[static_cast<std::size_t>(a) * n + b] = sum;
    }
  }
  return Group(n, std::move(t),
               "E_" + std::to_string(p) + "^" + std::to_string(rank));
}

Group dihedral(std::uint32_t m) {
  if (m < 3) throw std::invalid_argument("dihedral: m must be at least 3");
  const std::uint32_t n = checked_order(2ull * m, "dihedral");
  std::vector<elem> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t e = 0; e < 2; ++e) {
      for (std::uint32_t j = 0; j < m; ++j) {
        for (std::uint32_t d = 0; d < 2; ++d) {
          const std::uint32_t rot = e == 0 ? (i + j) % m : (i + m - j) % m;
          t[static_cast<std::size_t>(i + e * m) * n + (j + d * m)] =
              rot + (e ^ d) * m;
        }
      }
    }
  }
  return Group(n, std::move(t), "D_" + std::to_string(2 * m));
}

Group symmetric(unsigned n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("symmetric: n must be between 1 and 6");
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::uint32_t order = static_cast<std::uint32_t>(perms.size());
  // lexicographic rank lookup
  auto rank_of = [&](const std::vector<std::uint8_t>& q) {
    return static_cast<elem>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<elem> t(static_cast<std::size_t>(order) * order);
  std::vector<std::uint8_t> comp(n);
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) {
      for (unsigned x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      t[static_cast<std::size_t>(a) * order + b] = rank_of(comp);
    }
  }
  return Group(order, std::move(t), "S_" + std::to_string(n));
}

Group direct_product(const Group& g, const Group& h) {
  const std::uint32_t n =
      checked_order(std::uint64_t(g.order()) * h.order(), "direct_product");
  std::vector<elem> t(static_cast<std::size_t>(n) * n);
  const std::uint32_t hn = h.order();
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < hn; ++b)
      for (std::uint32_t c = 0; c < g.order(); ++c)
        for (std::uint32_t d = 0; d < hn; ++d)
          t[static_cast<std::size_t>(a * hn + b) * n + (c * hn + d)] =
              g.op(a, c) * hn + h.op(b, d);
  return Group(n, std::move(t), g.label() + "x" + h.label());
}

Group metacyclic(const MetacyclicParams& params) {
  const auto [k, l, m, n] = params;
  if (k == 0 || l == 0 || m == 0 || n == 0)
    throw std::invalid_argument("metacyclic: parameters must be positive");
  const std::string tag = "M(k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                          ",m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
  if (pow_mod(n, k, m) != 1 % m)
    throw std::invalid_argument(tag + ": m does not divide n^k - 1");
  if ((l % m) * ((n - 1) % m) % m != 0)
    throw std::invalid_argument(tag + ": m does not divide l(n-1)");
  const std::uint32_t order = checked_order(k * m, "metacyclic");

  std::vector<std::uint64_t> npow(k);  // n^a mod m
  npow[0] = 1 % m;
  for (std::uint64_t a = 1; a < k; ++a) npow[a] = npow[a - 1] * (n % m) % m;

  std::vector<elem> t(static_cast<std::size_t>(order) * order);
  for (std::uint64_t i = 0; i < k; ++i) {
    for (std::uint64_t j = 0; j < m; ++j) {
      for (std::uint64_t a = 0; a < k; ++a) {
        for (std::uint64_t b = 0; b < m; ++b) {
          std::uint64_t e = i + a;
          std::uint64_t c = (j * npow[a] + b) % m;
          if (e >= k) {
            e -= k;
            c = (c + l) % m;
          }
          t[static_cast<std::size_t>(i * m + j) * order + (a * m + b)] =
              static_cast<elem>(e * m + c);
        }
      }
    }
  }
  try {
    return Group(order, std::move(t), tag);
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(tag + ": inadmissible presentation (" +
                                ex.what() + ")");
  }
}

Group metacyclic_split(std::uint64_t k, std::uint64_t m, std::uint64_t n) {
  if (k == 0 || m == 0 || n == 0)
    throw std::invalid_argument("metacyclic_split: parameters must be positive");
  if (pow_mod(n, k, m) != 1 % m)
    throw std::invalid_argument("metacyclic_split: n^k != 1 (mod m)");
  MetacyclicParams p{k, m, m, n};
  Group g = metacyclic(p);
  return g.with_label("MS(k=" + std::to_string(k) + ",m=" + std::to_string(m) +
                      ",n=" + std::to_string(n) + ")");
}

Group pgroup_nonabelian(const PGroupParams& params) {
  const auto [nn, p, q] = params;
  if (nn < 2) throw std::invalid_argument("pgroup_nonabelian: n must be >= 2");
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("pgroup_nonabelian: p must be an odd prime");
  if (!is_prime(q)) throw std::invalid_argument("pgroup_nonabelian: q must be prime");
  if ((p - 1) % q != 0)
    throw std::invalid_argument("pgroup_nonabelian: q must divide p - 1");

  const unsigned rank = nn - 1;
  std::uint64_t base64 = 1;
  for (unsigned i = 0; i < rank; ++i) base64 *= p;
  const std::uint32_t base = checked_order(base64, "pgroup_nonabelian");
  const std::uint32_t order =
      checked_order(base64 * q, "pgroup_nonabelian");

  // smallest exponent > 1 of multiplicative order exactly q mod p
  std::uint64_t t_exp = 0;
  for (std::uint64_t c = 2; c < p; ++c) {
    if (pow_mod(c, q, p) == 1) {
      t_exp = c;
      break;
    }
  }
  std::vector<std::uint64_t> tpow(q);  // t^s mod p
  tpow[0] = 1;
  for (std::uint64_t s = 1; s < q; ++s) tpow[s] = tpow[s - 1] * t_exp % p;

  const std::uint32_t pp = static_cast<std::uint32_t>(p);
  auto twist_add = [&](std::uint32_t h1, std::uint32_t h2, std::uint64_t scale) {
    std::uint32_t sum = 0, mul = 1;
    for (unsigned d = 0; d < rank; ++d) {
      sum += static_cast<std::uint32_t>((h1 % pp + scale * (h2 % pp)) % pp) * mul;
      h1 /= pp;
      h2 /= pp;
      mul *= pp;
    }
    return sum;
  };

  std::vector<elem> t(static_cast<std::size_t>(order) * order);
  for (std::uint64_t s1 = 0; s1 < q; ++s1) {
    for (std::uint32_t h1 = 0; h1 < base; ++h1) {
      for (std::uint64_t s2 = 0; s2 < q; ++s2) {
        for (std::uint32_t h2 = 0; h2 < base; ++h2) {
          const std::uint32_t h = twist_add(h1, h2, tpow[s1]);
          const std::uint64_t s = (s1 + s2) % q;
          t[(s1 * base + h1) * static_cast<std::size_t>(order) +
            (s2 * base + h2)] = static_cast<elem>(s * base + h);
        }
      }
    }
  }
  return Group(order, std::move(t),
               "P(" + std::to_string(nn) + "," + std::to_string(p) +
                   ",q=" + std::to_string(q) + ")");
}

Group quotient(const Group& g, const Subgroup& n) {
  if (n.parent_order != g.order())
    throw std::invalid_argument("quotient: subgroup belongs to a different group");
  if (!is_normal(g, n))
    throw std::invalid_argument("quotient: subgroup is not normal in " + g.label());

  const std::uint32_t order = g.order() / n.order();
  std::vector<std::uint32_t> coset_of(g.order(), UINT32_MAX);
  std::vector<elem> reps;
  reps.reserve(order);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (elem h : n.members) coset_of[g.op(x, h)] = id;
  }

  std::vector<elem> t(static_cast<std::size_t>(order) * order);
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = 0; b < order; ++b)
      t[static_cast<std::size_t>(a) * order + b] = coset_of[g.op(reps[a], reps[b])];
  return Group(order, std::move(t),
               g.label() + "/N" + std::to_string(n.order()));
}

}  // namespace normlat
