#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ffdist/field.hpp"

namespace ffdist {

/// Dense grids larger than this are refused up front; the spectrum of a grid
/// this size already occupies 64 MiB.
inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 22;

/// q^dim, throwing std::invalid_argument when it would exceed kMaxGridPoints.
std::size_t grid_size_checked(FieldElem q, int dim);

/// Complex-valued function on F_q^dim with dense row-major storage, first
/// coordinate slowest.  Index order coincides with lexicographic order of the
/// coordinate tuples.
struct GridFunction {
  FieldCtxPtr ctx;
  int dim = 0;
  std::vector<std::complex<double>> values;

  GridFunction() = default;
  GridFunction(FieldCtxPtr c, int d);  // zero-filled

  FieldElem q() const { return ctx->q(); }
  std::size_t size() const { return values.size(); }

  std::size_t index_of(std::span<const FieldElem> x) const;
  void coords_of(std::size_t index, std::span<FieldElem> out) const;

  std::complex<double>& operator[](std::size_t i) { return values[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return values[i]; }
};

} // namespace ffdist
