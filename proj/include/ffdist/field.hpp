#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace ffdist {

// An element of F_q, always reduced into [0, q).
using FieldElem = std::uint32_t;

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Deterministic trial division up to sqrt(q).
bool is_odd_prime(std::int64_t q);

/// Arithmetic in the prime field F_q (q an odd prime) together with the
/// additive character e_q(t) = exp(2*pi*i*t/q), precomputed as the table of
/// q-th roots of unity.  Immutable after construction, safe to share across
/// threads; every operation is pure.
class FieldCtx {
public:
  /// Throws std::invalid_argument unless q is an odd prime.
  static FieldCtxPtr make(std::int64_t q);

  FieldElem q() const { return q_; }

  /// Reduces any integer (negatives included) into [0, q).
  FieldElem reduce(std::int64_t t) const {
    std::int64_t r = t % q_;
    return static_cast<FieldElem>(r < 0 ? r + q_ : r);
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    FieldElem s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return a >= b ? a - b : a + q_ - b; }
  FieldElem mul(FieldElem a, FieldElem b) const {
    return static_cast<FieldElem>(std::uint64_t(a) * b % q_);
  }
  FieldElem neg(FieldElem a) const { return a == 0 ? 0 : q_ - a; }

  /// Multiplicative inverse; throws std::domain_error for a = 0.
  FieldElem inverse(FieldElem a) const;

  /// 0 for a = 0, +1 for nonzero squares, -1 for non-squares.
  int legendre(FieldElem a) const { return legendre_[a % q_]; }

  /// e_q(t); t is reduced mod q first, negative t allowed.
  std::complex<double> unit_root(std::int64_t t) const { return roots_[reduce(t)]; }

  /// Root table indexed by an exponent already in [0, q).
  const std::complex<double>* roots() const { return roots_.data(); }

private:
  explicit FieldCtx(FieldElem q);

  FieldElem q_;
  std::vector<std::complex<double>> roots_;
  std::vector<FieldElem> inverses_;
  std::vector<std::int8_t> legendre_;
};

} // namespace ffdist
