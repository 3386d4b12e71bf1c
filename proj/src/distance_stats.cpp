#include "ffdist/distance_stats.hpp"

#include <omp.h>

#include <cmath>

#include "ffdist/fourier.hpp"
#include "ffdist/numutil.hpp"

namespace ffdist {

Rat128 DistanceStats::nu_square_sum() const {
  Int128 s2 = 0;
  for (std::int64_t h : hist) s2 += Int128(h) * h;
  const Int128 e2 = total_pairs();
  return {s2, e2 * e2};
}

DistanceStats distance_stats(const PointSet& set, int threads) {
  const FieldElem q = set.q();
  const int d = set.dim;
  const std::int64_t n = std::int64_t(set.npoints);
  const FieldElem* pts = set.coords.data();

  // (u^2 mod q) for u in (-q, q), then one table reduction of the d-term sum;
  // sums stay below d*(q-1), so the inner loop carries no division
  std::vector<FieldElem> sqmod(2 * q - 1);
  for (std::int64_t u = -(std::int64_t(q) - 1); u < std::int64_t(q); ++u)
    sqmod[u + q - 1] = FieldElem(u * u % q);
  std::vector<FieldElem> redsum(std::size_t(d) * (q - 1) + 1);
  for (std::size_t s = 0; s < redsum.size(); ++s) redsum[s] = FieldElem(s % q);

  std::vector<std::int64_t> hist(q, 0);
  const int team = threads <= 0 ? omp_get_max_threads() : threads;

#pragma omp parallel num_threads(team)
  {
    std::vector<std::int64_t> local(q, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      const FieldElem* xi = pts + std::size_t(i) * d;
      for (std::int64_t j = 0; j < n; ++j) {
        const FieldElem* yj = pts + std::size_t(j) * d;
        std::uint32_t s = 0;
        for (int a = 0; a < d; ++a)
          s += sqmod[std::int64_t(xi[a]) - yj[a] + q - 1];
        ++local[redsum[s]];
      }
    }
#pragma omp critical
    for (FieldElem t = 0; t < q; ++t) hist[t] += local[t];
  }

  DistanceStats stats;
  stats.ctx = set.ctx;
  stats.card = set.npoints;
  stats.hist = std::move(hist);
  for (FieldElem t = 0; t < q; ++t)
    if (stats.hist[t] > 0) stats.delta.push_back(t);
  return stats;
}

std::complex<double> nu_hat(const DistanceStats& stats, FieldElem k) {
  const FieldElem q = stats.q();
  const std::complex<double>* roots = stats.ctx->roots();
  k %= q;
  std::complex<double> acc = 0.0;
  std::size_t e = 0;
  for (FieldElem j = 0; j < q; ++j) {
    acc += double(stats.hist[j]) * std::conj(roots[e]);
    e += k;
    if (e >= q) e -= q;
  }
  const double card2 = double(stats.card) * double(stats.card);
  return acc / (double(q) * card2);
}

double nu_hat_square_sum(const DistanceStats& stats) {
  const FieldElem q = stats.q();
  double acc = 0.0;
  for (FieldElem k = 0; k < q; ++k) acc += std::norm(nu_hat(stats, k));
  return acc;
}

double salem_constant_from_spectrum(const GridFunction& spectrum, std::size_t card) {
  double max_abs2 = 0.0;
  for (std::size_t i = 1; i < spectrum.size(); ++i)
    max_abs2 = std::max(max_abs2, std::norm(spectrum[i]));
  const double denom = std::sqrt(double(card)) / dpow(double(spectrum.q()), spectrum.dim);
  return std::sqrt(max_abs2) / denom;
}

double salem_constant(const PointSet& set, int threads) {
  return salem_constant_from_spectrum(dft(indicator(set), threads), set.npoints);
}

} // namespace ffdist
