#pragma once

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "subindex/errors.hpp"

namespace subindex {

// Hard ceiling for every sieving operation.
inline constexpr std::uint64_t kEngineLimit = std::uint64_t{1} << 40;

// Odd numbers per sieving segment: 2^18 slots cover 2^19 integers and the
// bitmap fits in 32 KiB.
inline constexpr std::size_t kDefaultSegmentOdds = std::size_t{1} << 18;

// Half-open range [lo, hi) of candidate integers, both ends >= 2.
struct PrimeRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 2;

  friend bool operator==(const PrimeRange&, const PrimeRange&) = default;
};

// All primes <= limit by a plain array sieve.  Meant for base primes and
// small oracles; `limit` must fit comfortably in memory.
std::vector<std::uint32_t> simple_sieve(std::uint32_t limit);

// Upper bound B with pi(B) >= n, from p_n < n(ln n + ln ln n) for n >= 6.
// Small n fall back to a fixed bound.  Sieve to B and truncate to get the
// first n primes.
std::uint64_t first_n_primes_bound(std::uint64_t n);

// Splits [2, limit) into consecutive ranges of at most segment_size
// integers.  The ranges are pairwise disjoint and cover [2, limit) exactly;
// limit <= 2 yields no ranges.
std::vector<PrimeRange> partition(std::uint64_t limit, std::uint64_t segment_size);

namespace detail {
void validate_range(const PrimeRange& range);
}

// Segmented odd-only sieve.  One instance caches its base primes, so scans
// over nearby ranges reuse them.  Instances are independent; use one per
// thread.  A single instance must not be shared across concurrent scans.
class SegmentedSieve {
 public:
  explicit SegmentedSieve(std::size_t segment_odds = kDefaultSegmentOdds)
      : segment_odds_(std::max<std::size_t>(segment_odds, 64)) {}

  // Invokes fn(p) for each prime p in [range.lo, range.hi), ascending.
  template <typename Fn>
  void scan(const PrimeRange& range, Fn&& fn) {
    detail::validate_range(range);
    if (range.lo <= 2 && 2 < range.hi) fn(std::uint64_t{2});

    std::uint64_t first = std::max<std::uint64_t>(range.lo, 3) | 1;
    if (first >= range.hi) return;
    ensure_base_primes(isqrt(range.hi - 1));

    const std::size_t words = (segment_odds_ + 63) / 64;
    bitmap_.assign(words, ~std::uint64_t{0});

    for (std::uint64_t seg_lo = first; seg_lo < range.hi;
         seg_lo += 2 * segment_odds_) {
      std::uint64_t seg_hi = std::min<std::uint64_t>(
          range.hi, seg_lo + 2 * static_cast<std::uint64_t>(segment_odds_));
      std::size_t n_odds =
          static_cast<std::size_t>((seg_hi - seg_lo + 1) / 2);

      std::fill(bitmap_.begin(), bitmap_.end(), ~std::uint64_t{0});
      if (seg_lo == 1) clear_bit(0);  // 1 is not prime

      for (std::uint32_t p : base_) {
        std::uint64_t p64 = p;
        std::uint64_t start = p64 * p64;
        if (start >= seg_hi) break;
        if (start < seg_lo) {
          std::uint64_t m = (seg_lo + p64 - 1) / p64 * p64;
          if ((m & 1) == 0) m += p64;
          start = m;
        }
        for (std::uint64_t m = start; m < seg_hi; m += 2 * p64)
          clear_bit(static_cast<std::size_t>((m - seg_lo) >> 1));
      }

      // Emit the survivors in order.
      std::size_t full_words = n_odds / 64;
      for (std::size_t w = 0; w <= full_words && w < words; ++w) {
        std::uint64_t bits = bitmap_[w];
        if (w == full_words) {
          std::size_t rem = n_odds - w * 64;
          if (rem == 0) break;
          bits &= (rem == 64) ? ~std::uint64_t{0}
                              : ((std::uint64_t{1} << rem) - 1);
        }
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          fn(seg_lo + 2 * (static_cast<std::uint64_t>(w) * 64 + b));
        }
      }
    }
  }

 private:
  static std::uint64_t isqrt(std::uint64_t n);
  void ensure_base_primes(std::uint64_t up_to);
  void clear_bit(std::size_t i) {
    bitmap_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t segment_odds_;
  std::vector<std::uint32_t> base_;  // odd base primes, ascending
  std::uint64_t base_limit_ = 0;
  std::vector<std::uint64_t> bitmap_;
};

// Exactly the primes p with range.lo <= p < range.hi, ascending.
std::vector<std::uint64_t> primes_in_range(const PrimeRange& range);

// Number of primes in the range; pi(x) is count_primes({2, x+1}).
std::uint64_t count_primes(const PrimeRange& range);

}  // namespace subindex
