#include "subindex/primes.hpp"

#include <cmath>

namespace subindex {

std::vector<std::uint32_t> simple_sieve(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<std::uint8_t> is_prime(static_cast<std::size_t>(limit) + 1, 1);
  is_prime[0] = is_prime[1] = 0;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (is_prime[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) is_prime[j] = 0;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (is_prime[i]) primes.push_back(static_cast<std::uint32_t>(i));
  return primes;
}

std::uint64_t first_n_primes_bound(std::uint64_t n) {
  if (n < 6) return 14;  // pi(14) = 6
  long double ln = logl(static_cast<long double>(n));
  long double b = static_cast<long double>(n) * (ln + logl(ln));
  return static_cast<std::uint64_t>(ceill(b)) + 1;
}

std::vector<PrimeRange> partition(std::uint64_t limit, std::uint64_t segment_size) {
  if (segment_size < 2)
    throw std::invalid_argument("partition: segment_size must be >= 2");
  std::vector<PrimeRange> ranges;
  for (std::uint64_t lo = 2; lo < limit; lo += segment_size)
    ranges.push_back({lo, std::min(limit, lo + segment_size)});
  return ranges;
}

namespace detail {
void validate_range(const PrimeRange& range) {
  if (range.lo < 2 || range.lo >= range.hi)
    throw std::invalid_argument("PrimeRange: need 2 <= lo < hi");
  if (range.hi > kEngineLimit)
    throw CapacityError("PrimeRange: hi exceeds the 2^40 engine limit");
}
}  // namespace detail

std::uint64_t SegmentedSieve::isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(sqrtl(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void SegmentedSieve::ensure_base_primes(std::uint64_t up_to) {
  if (up_to <= base_limit_) return;
  // Grow geometrically so repeated scans near the same magnitude do not
  // re-sieve the base table every time.
  std::uint64_t target = std::max<std::uint64_t>(up_to, base_limit_ * 2);
  target = std::max<std::uint64_t>(target, 1 << 10);
  base_.clear();
  for (std::uint32_t p : simple_sieve(static_cast<std::uint32_t>(target)))
    if (p > 2) base_.push_back(p);
  base_limit_ = target;
}

std::vector<std::uint64_t> primes_in_range(const PrimeRange& range) {
  std::vector<std::uint64_t> primes;
  SegmentedSieve sieve;
  sieve.scan(range, [&](std::uint64_t p) { primes.push_back(p); });
  return primes;
}

std::uint64_t count_primes(const PrimeRange& range) {
  std::uint64_t n = 0;
  SegmentedSieve sieve;
  sieve.scan(range, [&](std::uint64_t) { ++n; });
  return n;
}

}  // namespace subindex
