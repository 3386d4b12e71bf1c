#include "ffdist/grid.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace ffdist {

std::size_t grid_size_checked(FieldElem q, int dim) {
  if (dim < 1) throw std::invalid_argument("grid dimension must be >= 1");
  std::size_t n = 1;
  for (int i = 0; i < dim; ++i) {
    if (n > kMaxGridPoints / q)
      throw std::invalid_argument("grid q^d = " + std::to_string(q) + "^" +
                                  std::to_string(dim) + " exceeds the " +
                                  std::to_string(kMaxGridPoints) + "-point limit");
    n *= q;
  }
  return n;
}

GridFunction::GridFunction(FieldCtxPtr c, int d) : ctx(std::move(c)), dim(d) {
  values.assign(grid_size_checked(ctx->q(), dim), {0.0, 0.0});
}

std::size_t GridFunction::index_of(std::span<const FieldElem> x) const {
  assert(int(x.size()) == dim);
  std::size_t idx = 0;
  for (FieldElem xi : x) idx = idx * q() + xi;
  return idx;
}

void GridFunction::coords_of(std::size_t index, std::span<FieldElem> out) const {
  assert(int(out.size()) == dim);
  for (int a = dim - 1; a >= 0; --a) {
    out[a] = FieldElem(index % q());
    index /= q();
  }
}

} // namespace ffdist
