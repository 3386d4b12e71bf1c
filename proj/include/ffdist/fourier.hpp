#pragma once

#include "ffdist/grid.hpp"

namespace ffdist {

// threads: 0 = full OpenMP team, 1 = serial, n = exactly n threads.
// Every per-output sum is computed by a single worker in a fixed order, so
// results are bit-identical for every thread count.

/// Forward transform F^(m) = q^-d sum_x e_q(-x.m) F(x), evaluated as d
/// successive length-q transforms (one per axis), pairwise summation per line.
GridFunction dft(const GridFunction& f, int threads = 0);

/// Inverse transform F(x) = sum_m e_q(x.m) F^(m); no normalization factor.
GridFunction idft(const GridFunction& g, int threads = 0);

struct PowerSum {
  double spatial;   // q^-d * sum_x |F(x)|^2
  double spectral;  // sum_m |F^(m)|^2
};

/// Both sides of the Plancherel identity; caller asserts equality.
PowerSum power_sum(const GridFunction& f, int threads = 0);

} // namespace ffdist
