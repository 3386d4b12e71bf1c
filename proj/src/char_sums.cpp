#include "ffdist/char_sums.hpp"

#include <stdexcept>

#include "ffdist/numutil.hpp"

namespace ffdist {

namespace {

std::complex<double> cpow_int(std::complex<double> base, int exp) {
  std::complex<double> r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

FieldElem norm_sq(std::span<const FieldElem> m, const FieldCtx& ctx) {
  std::uint64_t s = 0;
  for (FieldElem mi : m) s += std::uint64_t(mi) * mi % ctx.q();
  return FieldElem(s % ctx.q());
}

} // namespace

SumValue gauss_g(FieldElem k, const FieldCtx& ctx) {
  const FieldElem q = ctx.q();
  const std::complex<double>* roots = ctx.roots();
  std::complex<double> acc = 0.0;
  for (FieldElem x = 0; x < q; ++x) acc += roots[ctx.mul(k, ctx.mul(x, x))];
  return {acc, q, Method::brute};
}

SumValue gauss_G(std::span<const FieldElem> m, FieldElem k, const FieldCtx& ctx,
                 Method method) {
  const FieldElem q = ctx.q();
  const int d = int(m.size());
  const std::complex<double>* roots = ctx.roots();

  if (method == Method::closed) {
    if (k % q == 0) throw std::domain_error("gauss_G closed form requires k != 0");
    const FieldElem w = ctx.mul(ctx.inverse(ctx.reduce(4 * std::int64_t(k))), norm_sq(m, ctx));
    const SumValue g = gauss_g(ctx.neg(k), ctx);
    return {roots[w] * cpow_int(g.value, d), g.terms, Method::closed};
  }

  // brute: iterate x over the full grid in row-major order
  std::int64_t npoints = 1;
  for (int i = 0; i < d; ++i) npoints *= q;
  std::vector<FieldElem> x(d, 0);
  std::complex<double> acc = 0.0;
  for (std::int64_t n = 0; n < npoints; ++n) {
    std::int64_t dot = 0, nsq = 0;
    for (int i = 0; i < d; ++i) {
      dot += std::int64_t(x[i]) * m[i];
      nsq += std::int64_t(x[i]) * x[i];
    }
    acc += ctx.unit_root(dot - std::int64_t(k) * (nsq % q));
    for (int i = d - 1; i >= 0 && ++x[i] == q; --i) x[i] = 0;
  }
  return {acc, npoints, Method::brute};
}

SumValue kloosterman(FieldElem a, FieldElem b, const FieldCtx& ctx) {
  const FieldElem q = ctx.q();
  const std::complex<double>* roots = ctx.roots();
  std::complex<double> acc = 0.0;
  for (FieldElem j = 1; j < q; ++j) {
    const FieldElem s = ctx.add(ctx.mul(a, j), ctx.mul(b, ctx.inverse(j)));
    acc += std::conj(roots[s]);
  }
  return {acc, q - 1, Method::brute};
}

std::int64_t count_diff_squares(FieldElem t, const FieldCtx& ctx) {
  const FieldElem q = ctx.q();
  std::int64_t count = 0;
  for (FieldElem u = 0; u < q; ++u)
    for (FieldElem v = 0; v < q; ++v)
      if (ctx.sub(ctx.mul(u, u), ctx.mul(v, v)) == t % q) ++count;
  return count;
}

std::vector<std::int64_t> diff_squares_hist(const FieldCtx& ctx) {
  const FieldElem q = ctx.q();
  std::vector<std::int64_t> hist(q, 0);
  for (FieldElem u = 0; u < q; ++u)
    for (FieldElem v = 0; v < q; ++v)
      ++hist[ctx.sub(ctx.mul(u, u), ctx.mul(v, v))];
  return hist;
}

SumValue sphere_fourier_level(FieldElem r, FieldElem t, bool m_is_zero, int d,
                              const FieldCtx& ctx) {
  const FieldElem q = ctx.q();
  const std::complex<double>* roots = ctx.roots();
  r %= q;
  const FieldElem b = ctx.mul(ctx.inverse(ctx.reduce(4)), t % q);
  const std::complex<double> g1 = gauss_g(1, ctx).value;
  const bool odd_dim = d % 2 == 1;

  std::complex<double> acc = 0.0;
  for (FieldElem j = 1; j < q; ++j) {
    const FieldElem s = ctx.add(ctx.mul(j, r), ctx.mul(ctx.inverse(j), b));
    std::complex<double> term = std::conj(roots[s]);
    if (odd_dim && ctx.legendre(j) < 0) term = -term;
    acc += term;
  }
  std::complex<double> value = acc * cpow_int(g1, d) / dpow(double(q), d + 1);
  if (m_is_zero) value += 1.0 / double(q);
  return {value, q - 1, Method::closed, r == 0};
}

SumValue sphere_fourier(FieldElem r, std::span<const FieldElem> m, const FieldCtx& ctx,
                        Method method) {
  const FieldElem q = ctx.q();
  const int d = int(m.size());
  r %= q;

  if (method == Method::closed) {
    bool zero = true;
    for (FieldElem mi : m) zero &= mi % q == 0;
    return sphere_fourier_level(r, norm_sq(m, ctx), zero, d, ctx);
  }

  std::int64_t npoints = 1;
  for (int i = 0; i < d; ++i) npoints *= q;
  std::vector<FieldElem> x(d, 0);
  std::complex<double> acc = 0.0;
  std::int64_t on_sphere = 0;
  for (std::int64_t n = 0; n < npoints; ++n) {
    std::int64_t dot = 0, nsq = 0;
    for (int i = 0; i < d; ++i) {
      dot += std::int64_t(x[i]) * m[i];
      nsq += std::int64_t(x[i]) * x[i];
    }
    if (FieldElem(nsq % q) == r) {
      acc += std::conj(ctx.unit_root(dot));
      ++on_sphere;
    }
    for (int i = d - 1; i >= 0 && ++x[i] == q; --i) x[i] = 0;
  }
  return {acc / dpow(double(q), d), on_sphere, Method::brute, r == 0};
}

} // namespace ffdist
