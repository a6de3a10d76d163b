#include "subindex/mod_order.hpp"

#include <numeric>

#include "subindex/primes.hpp"

namespace subindex {

namespace {

// Base primes for trial division, enough for any argument < 2^41.
// Thread-safe: initialized once, read-only afterwards.
const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = simple_sieve(1'483'000);
  return primes;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
  if (modulus >= kModulusLimit)
    throw CapacityError("pow_mod: modulus must be below 2^62");
  unsigned __int128 result = 1;
  unsigned __int128 b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: argument must be >= 1");
  if (n >= kFactorizeLimit)
    throw CapacityError("factorize: argument must be below 2^41");
  Factorization factors;
  for (std::uint32_t q : trial_primes()) {
    std::uint64_t q64 = q;
    if (q64 * q64 > n) break;
    if (n % q64 == 0) {
      std::uint32_t e = 0;
      do {
        n /= q64;
        ++e;
      } while (n % q64 == 0);
      factors.push_back({q64, e});
    }
  }
  if (n > 1) factors.push_back({n, 1});  // leftover cofactor is prime
  return factors;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p,
                                   const Factorization& p_minus_1) {
  if (a % p == 0)
    throw std::domain_error("multiplicative_order: base divisible by modulus");
  std::uint64_t t = p - 1;
  for (const FactorEntry& f : p_minus_1) {
    for (std::uint32_t i = 0; i < f.exponent; ++i) {
      if (t % f.prime != 0) break;
      std::uint64_t cand = t / f.prime;
      if (pow_mod(a, cand, p) == 1)
        t = cand;
      else
        break;
    }
  }
  return t;
}

PrimeIndexRecord index_of(std::uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw std::domain_error("index_of: requires an odd prime >= 3");
  Factorization f = factorize(p - 1);
  std::uint64_t ord2 = multiplicative_order(2, p, f);
  std::uint64_t ord4 = ord2 / std::gcd<std::uint64_t, std::uint64_t>(ord2, 2);
  return {p, ord2, ord4, (p - 1) / (2 * ord4)};
}

std::uint64_t brute_force_index(std::uint64_t p) {
  if (p < 3 || p % 2 == 0)
    throw std::domain_error("brute_force_index: requires an odd prime >= 3");
  if (p > kBruteForceLimit)
    throw CapacityError("brute_force_index: p must be <= 10^6");
  // Closure of {1} under multiplication by the two generators.
  std::vector<std::uint8_t> seen(p, 0);
  std::vector<std::uint64_t> queue;
  queue.push_back(1);
  seen[1] = 1;
  std::uint64_t size = 0;
  const std::uint64_t gens[2] = {2, p - 1};
  while (!queue.empty()) {
    std::uint64_t x = queue.back();
    queue.pop_back();
    ++size;
    for (std::uint64_t g : gens) {
      std::uint64_t y = x * g % p;
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return (p - 1) / size;
}

}  // namespace subindex
