#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subindex {

// Exact rational arithmetic on 128-bit integers.  Values stay normalized
// (gcd(num, den) == 1, den > 0) so equality is plain member comparison.
// Every multiplication and addition is overflow-checked; the quantities
// this project feeds through here (Q(l) terms, per-l identities) stay far
// below the 127-bit ceiling, and the checks turn a silent wrap into an
// exception if that ever stops being true.
class Rational {
 public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(Int numerator, Int denominator) : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    // a/b + c/d = (ad + cb)/(bd); normalization reduces afterwards.
    Int ad = checked_mul(a.num_, b.den_);
    Int cb = checked_mul(b.num_, a.den_);
    return Rational(checked_add(ad, cb), checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    Int g1 = gcd(abs_int(a.num_), b.den_);
    Int g2 = gcd(abs_int(b.num_), a.den_);
    return Rational(unchecked{}, checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    Rational inv(unchecked{}, b.den_, b.num_);
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return a * inv;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  std::string str() const {
    std::string s = int_to_string(num_);
    if (den_ != 1) s += "/" + int_to_string(den_);
    return s;
  }

 private:
  struct unchecked {};
  Rational(unchecked, Int n, Int d) : num_(n), den_(d) {}

  static Int abs_int(Int v) { return v < 0 ? -v : v; }

  static Int gcd(Int a, Int b) {
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  static Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
      throw std::overflow_error("Rational: 128-bit multiply overflow");
    return r;
  }
  static Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
      throw std::overflow_error("Rational: 128-bit add overflow");
    return r;
  }

  static std::string int_to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u != 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
      u /= 10;
    }
    if (neg) s.insert(s.begin(), '-');
    return s;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(abs_int(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

}  // namespace subindex
