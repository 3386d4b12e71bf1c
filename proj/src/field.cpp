#include "ffdist/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ffdist {

bool is_odd_prime(std::int64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  for (std::int64_t i = 3; i * i <= q; i += 2)
    if (q % i == 0) return false;
  return true;
}

FieldCtx::FieldCtx(FieldElem q) : q_(q) {
  roots_.resize(q);
  const double step = 2.0 * std::numbers::pi / double(q);
  for (FieldElem t = 0; t < q; ++t) roots_[t] = std::polar(1.0, step * double(t));
  roots_[0] = {1.0, 0.0};

  // inv[a] = -(q/a) * inv[q mod a], linear-time recurrence
  inverses_.assign(q, 0);
  inverses_[1] = 1;
  for (FieldElem a = 2; a < q; ++a)
    inverses_[a] = FieldElem(std::uint64_t(q - q / a) * inverses_[q % a] % q);

  legendre_.assign(q, -1);
  legendre_[0] = 0;
  for (FieldElem x = 1; x < q; ++x) legendre_[std::uint64_t(x) * x % q] = 1;
}

FieldCtxPtr FieldCtx::make(std::int64_t q) {
  if (!is_odd_prime(q))
    throw std::invalid_argument("FieldCtx: q must be an odd prime, got " + std::to_string(q));
  return FieldCtxPtr(new FieldCtx(static_cast<FieldElem>(q)));
}

FieldElem FieldCtx::inverse(FieldElem a) const {
  a %= q_;
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inverses_[a];
}

} // namespace ffdist
