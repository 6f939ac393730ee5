// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates.  All weight/constant computations in the library go through
// this type; floating point is never used.
#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace girth5 {

struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, gcd(num,den) == 1

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { reduce(); }

  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) throw std::overflow_error("rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational: 64-bit overflow");
    Rational r;
    r.num = (long long)n;
    r.den = (long long)d;
    return r;
  }

  void reduce() {
    if (den == 0) throw std::overflow_error("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128((__int128)a.num * b.den + (__int128)b.num * a.den,
                   (__int128)a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128((__int128)a.num * b.den - (__int128)b.num * a.den,
                   (__int128)a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::overflow_error("rational: division by zero");
    return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
  Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
  Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
  Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den <= (__int128)b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
};

// Rational extended with a "minus infinity" tag, used by the omnipresent-face
// contribution.  The tag is explicit; no sentinel numeric values.
struct ExtRational {
  bool minus_infinity = false;
  Rational value;

  static ExtRational neg_inf() { ExtRational e; e.minus_infinity = true; return e; }
  static ExtRational of(const Rational& r) { ExtRational e; e.value = r; return e; }
  std::string str() const { return minus_infinity ? "-inf" : value.str(); }
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.minus_infinity != b.minus_infinity) return false;
    return a.minus_infinity || a.value == b.value;
  }
};

}  // namespace girth5
