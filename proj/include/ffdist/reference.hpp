#pragma once

#include <vector>

#include "ffdist/grid.hpp"
#include "ffdist/mattila.hpp"
#include "ffdist/point_set.hpp"

namespace ffdist::reference {

// Serial textbook implementations, deliberately independent of the tuned
// kernels: straight accumulation, direct definitions, no tables beyond the
// root lookup.  Used by the test suites, the verify command and the benchmark
// target as the comparison baseline.

/// F^(m) = q^-d sum_x e_q(-x.m) F(x) by the full O(q^2d) double loop.
GridFunction naive_dft(const GridFunction& f);

/// Pair histogram with per-pair modular reduction, single thread.
std::vector<std::int64_t> naive_distance_hist(const PointSet& set);

/// S(t) by one scan over the grid per level t.
std::vector<double> naive_level_sums(const GridFunction& spectrum);

} // namespace ffdist::reference
