#pragma once

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "subindex/rational.hpp"

namespace subindex {

// One machine epsilon of the working type (80-bit extended on x86-64),
// used as the per-operation rounding slack.
inline constexpr long double kWorkEps = LDBL_EPSILON;

// A real number together with a rigorous absolute error bound: the true
// mathematical quantity lies in [value - error_bound, value + error_bound].
// Combinators propagate bounds interval-style and charge a few ulps of
// rounding slack per step, so a chain of operations stays an enclosure.
struct PreciseValue {
  long double value = 0.0L;
  long double error_bound = 0.0L;

  static PreciseValue exact(long double v) { return {v, 0.0L}; }

  static PreciseValue from_rational(const Rational& r) {
    long double v = r.to_long_double();
    // Numerator/denominator may exceed 2^64, so both casts and the divide
    // can each round once.
    return {v, fabsl(v) * 4 * kWorkEps};
  }

  bool contains(long double x) const { return fabsl(value - x) <= error_bound; }

  bool intersects(const PreciseValue& o) const {
    return fabsl(value - o.value) <= error_bound + o.error_bound;
  }

  long double low() const { return value - error_bound; }
  long double high() const { return value + error_bound; }

  PreciseValue widened(long double extra) const {
    return {value, error_bound + extra};
  }

  friend PreciseValue operator+(const PreciseValue& a, const PreciseValue& b) {
    long double v = a.value + b.value;
    return {v, a.error_bound + b.error_bound + fabsl(v) * kWorkEps};
  }
  friend PreciseValue operator-(const PreciseValue& a, const PreciseValue& b) {
    long double v = a.value - b.value;
    return {v, a.error_bound + b.error_bound + fabsl(v) * kWorkEps};
  }
  friend PreciseValue operator*(const PreciseValue& a, const PreciseValue& b) {
    long double v = a.value * b.value;
    long double e = fabsl(a.value) * b.error_bound + fabsl(b.value) * a.error_bound +
                    a.error_bound * b.error_bound + fabsl(v) * kWorkEps;
    return {v, e};
  }
  friend PreciseValue operator/(const PreciseValue& a, const PreciseValue& b) {
    long double babs = fabsl(b.value);
    if (babs <= b.error_bound)
      throw std::domain_error("PreciseValue: divisor interval contains zero");
    long double v = a.value / b.value;
    long double e = (a.error_bound + fabsl(v) * b.error_bound) / (babs - b.error_bound) +
                    fabsl(v) * kWorkEps;
    return {v, e};
  }
};

inline PreciseValue exp_pv(const PreciseValue& a) {
  long double v = expl(a.value);
  long double e = v * expm1l(a.error_bound) + fabsl(v) * 2 * kWorkEps;
  return {v, e};
}

inline PreciseValue log_pv(const PreciseValue& a) {
  long double lo = a.value - a.error_bound;
  if (lo <= 0.0L) throw std::domain_error("PreciseValue: log of interval touching 0");
  long double v = logl(a.value);
  long double e = a.error_bound / lo + fabsl(v) * 2 * kWorkEps;
  return {v, e};
}

}  // namespace subindex
