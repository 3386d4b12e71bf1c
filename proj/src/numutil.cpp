#include "ffdist/numutil.hpp"

#include <stdexcept>

namespace ffdist {

namespace {

template <typename T>
T pairwise_impl(std::span<const T> v) {
  if (v.size() <= 16) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_impl(v.subspan(0, half)) + pairwise_impl(v.subspan(half));
}

} // namespace

std::complex<double> pairwise_sum(std::span<const std::complex<double>> v) {
  return pairwise_impl(v);
}

double pairwise_sum(std::span<const double> v) { return pairwise_impl(v); }

double dpow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  std::string s;
  while (u > 0) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int128 isqrt128(Int128 n) {
  if (n < 0) throw std::domain_error("isqrt128: negative argument");
  if (n < 2) return n;
  // Newton iteration from a double seed, then correct.
  Int128 x = Int128(__builtin_sqrt(double(n)));
  while (x > 0 && x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::int64_t ceil_pow_half(std::int64_t q, int e) {
  if (e % 2 == 0) {
    Int128 r = 1;
    for (int i = 0; i < e / 2; ++i) r *= q;
    return std::int64_t(r);
  }
  Int128 p = 1;
  for (int i = 0; i < e; ++i) p *= q;
  Int128 s = isqrt128(p);
  return std::int64_t(s * s == p ? s : s + 1);
}

} // namespace ffdist
