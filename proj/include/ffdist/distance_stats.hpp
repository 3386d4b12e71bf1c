#pragma once

#include <complex>
#include <vector>

#include "ffdist/point_set.hpp"
#include "ffdist/rational.hpp"

namespace ffdist {

/// Exact histogram of the quadratic-form values |x - y|^2 over ordered pairs
/// of E, plus the derived incidence measure nu(j) = hist(j) / (#E)^2 and the
/// distance set Delta(E) = supp(nu).
struct DistanceStats {
  FieldCtxPtr ctx;
  std::size_t card = 0;                // #E
  std::vector<std::int64_t> hist;      // size q, sums to (#E)^2
  std::vector<FieldElem> delta;        // sorted support of hist

  FieldElem q() const { return ctx->q(); }
  Int128 total_pairs() const { return Int128(card) * Int128(card); }
  Rat128 nu(FieldElem j) const { return {hist[j % q()], total_pairs()}; }
  Rat128 nu_square_sum() const;        // sum_j nu(j)^2, exact
};

/// Exact O((#E)^2) pair enumeration with 64-bit counters per bin.
DistanceStats distance_stats(const PointSet& set, int threads = 0);

/// nu^(k) = q^-1 (#E)^-2 sum_j hist(j) e_q(-j k); nu^(0) = 1/q exactly.
std::complex<double> nu_hat(const DistanceStats& stats, FieldElem k);

/// sum_k |nu^(k)|^2 over k in F_q.
double nu_hat_square_sum(const DistanceStats& stats);

/// max_{m != 0} |E^(m)| / (q^-d sqrt(#E)); 1 means square-root cancellation
/// at every nonzero frequency.
double salem_constant(const PointSet& set, int threads = 0);
double salem_constant_from_spectrum(const GridFunction& spectrum, std::size_t card);

} // namespace ffdist
