#include "ffdist/reference.hpp"

#include "ffdist/numutil.hpp"

namespace ffdist::reference {

GridFunction naive_dft(const GridFunction& f) {
  const FieldElem q = f.q();
  const int d = f.dim;
  GridFunction out(f.ctx, d);
  std::vector<FieldElem> m(d), x(d);
  for (std::size_t mi = 0; mi < out.size(); ++mi) {
    out.coords_of(mi, m);
    std::complex<double> acc = 0.0;
    for (std::size_t xi = 0; xi < f.size(); ++xi) {
      f.coords_of(xi, x);
      std::int64_t dot = 0;
      for (int a = 0; a < d; ++a) dot += std::int64_t(x[a]) * m[a];
      acc += f[xi] * std::conj(f.ctx->unit_root(dot));
    }
    out[mi] = acc / dpow(double(q), d);
  }
  return out;
}

std::vector<std::int64_t> naive_distance_hist(const PointSet& set) {
  const FieldElem q = set.q();
  std::vector<std::int64_t> hist(q, 0);
  for (std::size_t i = 0; i < set.npoints; ++i) {
    const auto x = set.point(i);
    for (std::size_t j = 0; j < set.npoints; ++j) {
      const auto y = set.point(j);
      std::int64_t s = 0;
      for (int a = 0; a < set.dim; ++a) {
        const std::int64_t diff = std::int64_t(x[a]) - y[a];
        s += diff * diff % q;
      }
      ++hist[s % q];
    }
  }
  return hist;
}

std::vector<double> naive_level_sums(const GridFunction& spectrum) {
  const FieldElem q = spectrum.q();
  const int d = spectrum.dim;
  std::vector<double> s(q, 0.0);
  std::vector<FieldElem> m(d);
  for (FieldElem t = 0; t < q; ++t) {
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      spectrum.coords_of(i, m);
      std::uint64_t nsq = 0;
      for (int a = 0; a < d; ++a) nsq += std::uint64_t(m[a]) * m[a] % q;
      if (FieldElem(nsq % q) == t) s[t] += std::norm(spectrum[i]);
    }
  }
  return s;
}

} // namespace ffdist::reference
