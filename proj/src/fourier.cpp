#include "ffdist/fourier.hpp"

#include <omp.h>

#include <cstdint>

#include "ffdist/numutil.hpp"

namespace ffdist {

namespace {

int team_size(int threads) { return threads <= 0 ? omp_get_max_threads() : threads; }

// One length-q transform along `axis` applied to every line of the grid.
// Lines are independent, so the loop parallelizes without any shared state.
void axis_pass(const FieldCtx& ctx, int dim, int axis, bool inverse,
               const std::vector<std::complex<double>>& in,
               std::vector<std::complex<double>>& out, int threads) {
  const std::size_t q = ctx.q();
  const std::complex<double>* roots = ctx.roots();
  std::size_t stride = 1;
  for (int a = dim - 1; a > axis; --a) stride *= q;
  const std::size_t block = stride * q;
  const std::int64_t nlines = std::int64_t(in.size() / q);
  const double scale = inverse ? 1.0 : 1.0 / double(q);

#pragma omp parallel num_threads(team_size(threads))
  {
    std::vector<std::complex<double>> line(q), terms(q);
#pragma omp for schedule(static)
    for (std::int64_t li = 0; li < nlines; ++li) {
      const std::size_t base = std::size_t(li) / stride * block + std::size_t(li) % stride;
      for (std::size_t x = 0; x < q; ++x) line[x] = in[base + x * stride];
      for (std::size_t m = 0; m < q; ++m) {
        // exponent x*m mod q walks in steps of m; forward kernel is e_q(-x*m)
        std::size_t e = 0;
        if (inverse) {
          for (std::size_t x = 0; x < q; ++x) {
            terms[x] = line[x] * roots[e];
            e += m;
            if (e >= q) e -= q;
          }
        } else {
          for (std::size_t x = 0; x < q; ++x) {
            terms[x] = line[x] * std::conj(roots[e]);
            e += m;
            if (e >= q) e -= q;
          }
        }
        out[base + m * stride] = pairwise_sum(std::span<const std::complex<double>>(terms)) * scale;
      }
    }
  }
}

GridFunction transform(const GridFunction& f, bool inverse, int threads) {
  GridFunction cur = f;
  GridFunction next(f.ctx, f.dim);
  for (int axis = 0; axis < f.dim; ++axis) {
    axis_pass(*f.ctx, f.dim, axis, inverse, cur.values, next.values, threads);
    std::swap(cur.values, next.values);
  }
  return cur;
}

} // namespace

GridFunction dft(const GridFunction& f, int threads) { return transform(f, false, threads); }

GridFunction idft(const GridFunction& g, int threads) { return transform(g, true, threads); }

PowerSum power_sum(const GridFunction& f, int threads) {
  std::vector<double> sq(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) sq[i] = std::norm(f.values[i]);
  const double spatial = pairwise_sum(std::span<const double>(sq)) / dpow(double(f.q()), f.dim);

  GridFunction fh = dft(f, threads);
  for (std::size_t i = 0; i < fh.size(); ++i) sq[i] = std::norm(fh.values[i]);
  const double spectral = pairwise_sum(std::span<const double>(sq));
  return {spatial, spectral};
}

} // namespace ffdist
