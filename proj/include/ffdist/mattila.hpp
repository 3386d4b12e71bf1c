#pragma once

#include "ffdist/distance_stats.hpp"
#include "ffdist/report.hpp"

namespace ffdist {

/// S(t) = sum_{|m|^2 = t} |E^(m)|^2, the spherical average of the indicator's
/// spectrum bucketed by the level t; sum_t S(t) = q^-d #E.
struct LevelSums {
  FieldCtxPtr ctx;
  int dim = 0;
  std::vector<double> s;  // size q

  double total() const;
  double max_offzero() const;  // max over t != 0
};

LevelSums level_sums(const PointSet& set, int threads = 0);
LevelSums level_sums_from_spectrum(const GridFunction& spectrum);

struct SigmaBound {
  double max_offzero;
  double threshold;  // q^-(d+1)/2 (#E)^2 / q^d
  double ratio;
};

/// Reported ratio only; the bound's constant is implicit in the estimate.
SigmaBound sigma_bound_check(const PointSet& set, int threads = 0);
SigmaBound sigma_bound_from_level_sums(const LevelSums& ls, std::size_t card);

/// M(q) = q^(3d+1) (#E)^-4 sum_t S(t)^2, via one transform and one pass.
double mattila_fourier(const PointSet& set, int threads = 0);
double mattila_fourier_from_level_sums(const LevelSums& ls, std::size_t card);

/// Exact counting route: M(q) = q sum_j nu(j)^2 - 1 + q^d / (#E)^2, all
/// integer inputs.  The middle sign differs from the displayed derivation in
/// the source material; the exact re-derivation requires the minus and is
/// cross-checked against mattila_fourier on every analysis run.
Rat128 mattila_exact(const DistanceStats& stats, int dim);

/// #{(x,y,x',y') in E^4 : |x-y|^2 = |x'-y'|^2} = sum_j hist(j)^2.
Int128 quadruple_count(const DistanceStats& stats);

/// Full analysis: one distance enumeration, one transform, every report field.
AnalysisReport bound_report(const PointSet& set, int threads = 0);

} // namespace ffdist
