#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>

namespace ffdist {

using Int128 = __int128;

/// Tree (pairwise) summation; rounding error grows with log(n) instead of n.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> v);
double pairwise_sum(std::span<const double> v);

/// base^exp by repeated multiplication in binary64 (exp >= 0).
double dpow(double base, int exp);

std::string to_string(Int128 v);
Int128 gcd128(Int128 a, Int128 b);

/// floor(sqrt(n)) for n >= 0.
Int128 isqrt128(Int128 n);

/// ceil(q^(e/2)) computed exactly in integers.
std::int64_t ceil_pow_half(std::int64_t q, int e);

} // namespace ffdist
