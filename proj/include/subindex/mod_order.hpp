#pragma once

#include <cstdint>
#include <vector>

#include "subindex/errors.hpp"

namespace subindex {

// Moduli must leave headroom for double-width products.
inline constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 62;

// factorize() works by trial division against a fixed sieved prime table,
// which covers arguments below 2^41.
inline constexpr std::uint64_t kFactorizeLimit = std::uint64_t{1} << 41;

// Largest p accepted by the brute-force subgroup oracle.
inline constexpr std::uint64_t kBruteForceLimit = 1'000'000;

struct FactorEntry {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

// Prime factorization with strictly increasing primes; multiplying the
// entries back reconstructs the argument.  Empty for n = 1.
using Factorization = std::vector<FactorEntry>;

// One odd prime with its order data and subgroup index:
//   ord2 = ord_p(2), ord4 = ord_p(4) = ord2 / gcd(ord2, 2),
//   ell  = (p - 1) / (2 * ord4), exactly.
struct PrimeIndexRecord {
  std::uint64_t p;
  std::uint64_t ord2;
  std::uint64_t ord4;
  std::uint64_t ell;
};

// base^exponent mod modulus by square-and-multiply with 128-bit
// intermediates.  Requires 2 <= modulus < 2^62.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

// Complete factorization of n (1 <= n < 2^41) by trial division over
// sieved primes up to sqrt(n).
Factorization factorize(std::uint64_t n);

// Least t >= 1 with a^t = 1 (mod p), for an odd prime p and gcd(a, p) = 1.
// p_minus_1 must be the factorization of p - 1; the order starts at p - 1
// and divides out each prime power while the power condition holds.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p,
                                   const Factorization& p_minus_1);

// Order and subgroup-index record for an odd prime p >= 3.
PrimeIndexRecord index_of(std::uint64_t p);

// Independent oracle: enumerates the subgroup generated by -1 and 2 inside
// the multiplicative group mod p, element by element, and returns its index
// (p - 1) / |subgroup|.  Deliberately takes no shortcut through orders.
std::uint64_t brute_force_index(std::uint64_t p);

}  // namespace subindex
