#pragma once

#include <stdexcept>

#include "ffdist/numutil.hpp"

namespace ffdist {

/// Exact rational on 128-bit integers, always normalized: den > 0, gcd(num, den) = 1.
/// No overflow checks; operands stay far below 2^127 at the grid sizes this
/// library accepts.
struct Rat128 {
  Int128 num = 0;
  Int128 den = 1;

  Rat128() = default;
  Rat128(Int128 n, Int128 d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rat128: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return double(num) / double(den); }

  friend bool operator==(const Rat128& a, const Rat128& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend Rat128 operator+(const Rat128& a, const Rat128& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rat128 operator-(const Rat128& a, const Rat128& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rat128 operator*(const Rat128& a, const Rat128& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend bool operator<(const Rat128& a, const Rat128& b) {
    return a.num * b.den < b.num * a.den;
  }
};

} // namespace ffdist
