#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "crossring/errors.hpp"

namespace crossring {

// Exact fraction over 64-bit integers, kept normalized (gcd 1, positive
// denominator). Arithmetic goes through 128-bit intermediates.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rational from128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    if (r.num != n || r.den != d) throw PreconditionError("rational overflow");
    return r;
  }

  friend Rational operator+(Rational a, Rational b) {
    return from128(static_cast<__int128>(a.num) * b.den +
                       static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return from128(static_cast<__int128>(a.num) * b.den -
                       static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return from128(static_cast<__int128>(a.num) * b.num,
                   static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw PreconditionError("rational division by zero");
    return from128(static_cast<__int128>(a.num) * b.den,
                   static_cast<__int128>(a.den) * b.num);
  }

  friend bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(Rational a, Rational b) { return !(a == b); }
  friend bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend bool operator>(Rational a, Rational b) { return b < a; }
  friend bool operator>=(Rational a, Rational b) { return !(a < b); }

  // Smallest integer >= value.
  std::int64_t ceil() const {
    std::int64_t q = num / den;
    if (num > 0 && num % den != 0) ++q;
    return q;
  }

  // Largest integer <= value.
  std::int64_t floor() const {
    std::int64_t q = num / den;
    if (num < 0 && num % den != 0) --q;
    return q;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace crossring
