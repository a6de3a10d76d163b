#pragma once

#include <cstdint>

#include "subindex/precise.hpp"

namespace subindex {

// Tuning knobs for the analytic evaluations.  The defaults were chosen so
// every reported error bound lands far below 1e-12; the knobs exist so
// tests can double the depth and confirm the value moves by less than the
// bound it reported.
struct ZetaParams {
  unsigned cutoff = 64;  // direct-sum length N
  unsigned depth = 10;   // correction terms K (needs Bernoulli up to 2K+2)
};

struct ArtinParams {
  std::uint64_t prime_cutoff = 100;  // exact Euler factors for p <= this
  unsigned series_depth = 64;        // tail series truncated at this power
};

// Riemann zeta(s) for real s >= 2, by direct summation with an
// Euler-Maclaurin tail whose remainder is folded into the error bound.
PreciseValue zeta(long double s, const ZetaParams& params = {});

// zeta(s) - 1 with the same contract.  Kept separate because the prime
// zeta inversion needs log(zeta) of arguments where zeta(s) - 1 underflows
// the working precision of 1 + x.
PreciseValue zeta_minus_one(long double s, const ZetaParams& params = {});

// Prime zeta P(s) = sum over primes of p^-s, for real s >= 2, via Moebius
// inversion of log zeta(ns).  `tail_exponent` stops the sum once
// n*s exceeds it; the discarded tail is part of the error bound.
PreciseValue prime_zeta(long double s, long double tail_exponent = 75.0L);

// Exact finite sum over sieved primes p <= bound of p^-s.
// prime_zeta(s) - prime_zeta_partial(s, B) encloses the tail over p > B.
PreciseValue prime_zeta_partial(long double s, std::uint64_t bound);

// The Artin constant, prod over primes of (1 - 1/(p(p-1))).  Evaluated in
// log form: exact factors up to params.prime_cutoff, then a tail expanded
// into prime zeta values with a rigorously bounded truncation remainder.
// The default-parameter result is cached.
PreciseValue artin_constant(const ArtinParams& params = {});

// Moebius function for small arguments (used by the inversion; exposed
// for tests).
int mobius(std::uint64_t n);

}  // namespace subindex
