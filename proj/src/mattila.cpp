#include "ffdist/mattila.hpp"

#include <cmath>
#include <limits>

#include "ffdist/fourier.hpp"
#include "ffdist/numutil.hpp"

namespace ffdist {

double LevelSums::total() const {
  return pairwise_sum(std::span<const double>(s));
}

double LevelSums::max_offzero() const {
  double m = 0.0;
  for (std::size_t t = 1; t < s.size(); ++t) m = std::max(m, s[t]);
  return m;
}

LevelSums level_sums_from_spectrum(const GridFunction& spectrum) {
  const FieldElem q = spectrum.q();
  const int d = spectrum.dim;

  LevelSums ls;
  ls.ctx = spectrum.ctx;
  ls.dim = d;
  ls.s.assign(q, 0.0);

  // |m|^2 via an odometer over the coordinates; the bucket pass stays serial
  // so the accumulation order is independent of the thread count
  std::vector<FieldElem> m(d, 0);
  std::vector<FieldElem> sq(q);
  for (FieldElem v = 0; v < q; ++v) sq[v] = FieldElem(std::uint64_t(v) * v % q);
  FieldElem nsq = 0;
  const FieldCtx& ctx = *spectrum.ctx;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    ls.s[nsq] += std::norm(spectrum[i]);
    for (int a = d - 1; a >= 0; --a) {
      nsq = ctx.sub(nsq, sq[m[a]]);
      if (++m[a] == q) m[a] = 0;
      nsq = ctx.add(nsq, sq[m[a]]);
      if (m[a] != 0) break;
    }
  }
  return ls;
}

LevelSums level_sums(const PointSet& set, int threads) {
  return level_sums_from_spectrum(dft(indicator(set), threads));
}

SigmaBound sigma_bound_from_level_sums(const LevelSums& ls, std::size_t card) {
  const double q = double(ls.ctx->q());
  const double max = ls.max_offzero();
  const double threshold =
      double(card) * double(card) / dpow(std::sqrt(q), 3 * ls.dim + 1);
  return {max, threshold, max / threshold};
}

SigmaBound sigma_bound_check(const PointSet& set, int threads) {
  return sigma_bound_from_level_sums(level_sums(set, threads), set.npoints);
}

double mattila_fourier_from_level_sums(const LevelSums& ls, std::size_t card) {
  std::vector<double> sq(ls.s.size());
  for (std::size_t t = 0; t < ls.s.size(); ++t) sq[t] = ls.s[t] * ls.s[t];
  const double sum = pairwise_sum(std::span<const double>(sq));
  const double q = double(ls.ctx->q());
  return dpow(q, 3 * ls.dim + 1) / dpow(double(card), 4) * sum;
}

double mattila_fourier(const PointSet& set, int threads) {
  return mattila_fourier_from_level_sums(level_sums(set, threads), set.npoints);
}

Rat128 mattila_exact(const DistanceStats& stats, int dim) {
  const Int128 q = stats.q();
  Int128 qd = 1;
  for (int i = 0; i < dim; ++i) qd *= q;
  Int128 s2 = 0;
  for (std::int64_t h : stats.hist) s2 += Int128(h) * h;
  const Int128 e2 = stats.total_pairs();
  const Int128 e4 = e2 * e2;
  return {q * s2 - e4 + qd * e2, e4};
}

Int128 quadruple_count(const DistanceStats& stats) {
  Int128 s2 = 0;
  for (std::int64_t h : stats.hist) s2 += Int128(h) * h;
  return s2;
}

AnalysisReport bound_report(const PointSet& set, int threads) {
  const FieldElem q = set.q();
  const int d = set.dim;

  const DistanceStats stats = distance_stats(set, threads);
  const GridFunction spectrum = dft(indicator(set), threads);
  const LevelSums ls = level_sums_from_spectrum(spectrum);

  AnalysisReport r;
  r.q = q;
  r.d = d;
  r.family = set.family;
  r.seed = set.seed;
  r.card_E = set.npoints;
  r.card_Delta = stats.delta.size();
  r.M_fourier = mattila_fourier_from_level_sums(ls, set.npoints);
  r.M_exact = mattila_exact(stats, d);
  r.salem_const = salem_constant_from_spectrum(spectrum, set.npoints);
  r.cs_lower = 1.0 / (double(q) * nu_hat_square_sum(stats));

  const double card = double(set.npoints);
  const double delta = double(r.card_Delta);

  const SigmaBound sb = sigma_bound_from_level_sums(ls, set.npoints);
  r.ratio_something = sb.ratio;
  r.beta_measured = sb.max_offzero > 0.0
                        ? -std::log(sb.max_offzero) / std::log(double(q))
                        : std::numeric_limits<double>::infinity();

  const double bound_mattila =
      std::min(double(q), r.M_fourier > 0.0
                              ? double(q) / r.M_fourier
                              : std::numeric_limits<double>::infinity());
  r.ratio_mattila = delta / bound_mattila;

  const double bound_trivial =
      std::min(double(q), card / dpow(std::sqrt(double(q)), d - 1));
  r.ratio_trivial = delta / bound_trivial;

  const double bound_plug = std::min(
      double(q), dpow(card, 3) / std::pow(double(q), 2.0 * d - r.beta_measured));
  r.ratio_plug = delta / bound_plug;

  r.ratio_conjecture = delta / std::pow(card, 2.0 / d);

  if (std::int64_t(set.npoints) >= ceil_pow_half(q, d + 1))
    r.falconer_ok = r.card_Delta == q ? 1 : 0;

  if (set.degenerate) r.flags.push_back("degenerate_r0");
  return r;
}

} // namespace ffdist
