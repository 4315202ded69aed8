#include "normlat/numth.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace normlat {

const char* to_string(NumberClass c) {
  switch (c) {
    case NumberClass::deficient: return "deficient";
    case NumberClass::perfect: return "perfect";
    case NumberClass::abundant: return "abundant";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

mpz_class sigma_divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma_divisors: n must be positive");
  mpz_class sum = 0;
  for (std::uint64_t d : divisors(n)) sum += mpz_class(static_cast<unsigned long>(d));
  return sum;
}

NumberClass classify_number(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("classify_number: n must be positive");
  const mpz_class s = sigma_divisors(n);
  const mpz_class twice = 2 * mpz_class(static_cast<unsigned long>(n));
  if (s < twice) return NumberClass::deficient;
  if (s == twice) return NumberClass::perfect;
  return NumberClass::abundant;
}

mpz_class gaussian_binomial(unsigned n, unsigned k, std::uint64_t p) {
  if (k > n) throw std::invalid_argument("gaussian_binomial: k > n");
  if (k > n - k) k = n - k;  // symmetry
  mpz_class result = 1;
  mpz_class pz(static_cast<unsigned long>(p));
  for (unsigned i = 1; i <= k; ++i) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), pz.get_mpz_t(), n - k + i);
    num -= 1;
    mpz_pow_ui(den.get_mpz_t(), pz.get_mpz_t(), i);
    den -= 1;
    result *= num;
    // the partial product is itself a Gaussian binomial, so division is exact
    assert(mpz_divisible_p(result.get_mpz_t(), den.get_mpz_t()));
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), den.get_mpz_t());
  }
  return result;
}

CountTable count_table(std::uint64_t p, unsigned rank) {
  if (!is_prime(p)) throw std::invalid_argument("count_table: p must be prime");
  CountTable t;
  t.p = p;
  t.rank = rank;
  t.counts = {mpz_class(1)};
  t.weighted = 1;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class prev_total = 1;
  for (unsigned r = 1; r <= rank; ++r) {
    std::vector<mpz_class> next(r + 1, mpz_class(1));
    for (unsigned k = 1; k < r; ++k) {
      mpz_class ppow;
      mpz_pow_ui(ppow.get_mpz_t(), pz.get_mpz_t(), r - k);
      next[k] = t.counts[k] + ppow * t.counts[k - 1];
    }
    mpz_class pr;
    mpz_pow_ui(pr.get_mpz_t(), pz.get_mpz_t(), r);
    t.weighted += pr * prev_total;
    t.counts = std::move(next);
    prev_total = 0;
    for (const auto& c : t.counts) prev_total += c;
  }
  t.total = prev_total;
  return t;
}

}  // namespace normlat
