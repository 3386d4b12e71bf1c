#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ffdist/grid.hpp"

namespace ffdist {

/// Finite subset of F_q^dim.  Points are stored flattened, deduplicated and
/// sorted lexicographically; every coordinate is reduced mod q.  Immutable
/// after construction.
struct PointSet {
  FieldCtxPtr ctx;
  int dim = 0;
  std::size_t npoints = 0;
  std::vector<FieldElem> coords;  // npoints * dim entries

  // provenance
  std::string family;     // generator label with parameters, e.g. "sphere(r=2)"
  std::uint64_t seed = 0;
  bool degenerate = false;  // sphere with r = 0

  FieldElem q() const { return ctx->q(); }
  std::span<const FieldElem> point(std::size_t i) const {
    return {coords.data() + i * dim, std::size_t(dim)};
  }
};

/// E = F_q^d.
PointSet gen_full(FieldCtxPtr ctx, int d);

/// E = {(x, |x|^2) : x in F_q^(d-1)}; requires d >= 2.
PointSet gen_paraboloid(FieldCtxPtr ctx, int d);

/// E = S_r = {x : |x|^2 = r}; requires d >= 2.  r = 0 sets the degeneracy flag.
PointSet gen_sphere(FieldCtxPtr ctx, int d, FieldElem r);

/// E = {(k, k) : k in F_q}, d fixed at 2.
PointSet gen_diagonal(FieldCtxPtr ctx);

/// Exactly n distinct uniform points, reproducible from the seed.
PointSet gen_random(FieldCtxPtr ctx, int d, std::size_t n, std::uint64_t seed);

/// Text format: line 1 is "q d", each further line d space-separated
/// integers in [0, q).  Duplicate points are rejected on load.
PointSet load_set(const std::filesystem::path& path);
void save_set(const PointSet& set, const std::filesystem::path& path);

/// Characteristic function of E as a dense grid.
GridFunction indicator(const PointSet& set);

} // namespace ffdist
