#include "ffdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ffdist/char_sums.hpp"
#include "ffdist/fourier.hpp"
#include "ffdist/mattila.hpp"
#include "ffdist/numutil.hpp"
#include "ffdist/point_set.hpp"
#include "ffdist/reference.hpp"

namespace ffdist {

namespace {

std::vector<std::int64_t> primes_up_to(std::int64_t max_q) {
  std::vector<std::int64_t> primes;
  for (std::int64_t q = 3; q <= max_q; q += 2)
    if (is_odd_prime(q)) primes.push_back(q);
  return primes;
}

double uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

GridFunction random_grid(FieldCtxPtr ctx, int d, std::mt19937_64& rng) {
  GridFunction f(std::move(ctx), d);
  for (auto& v : f.values) v = {2.0 * uniform(rng) - 1.0, 2.0 * uniform(rng) - 1.0};
  return f;
}

struct Checker {
  std::vector<CheckResult> results;
  // current check
  std::string name;
  bool pass = true;
  std::string first_failure;
  std::int64_t cases = 0;

  void begin(std::string n) {
    name = std::move(n);
    pass = true;
    first_failure.clear();
    cases = 0;
  }
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
  }
  void end() {
    std::ostringstream detail;
    if (pass)
      detail << cases << " cases";
    else
      detail << first_failure;
    results.push_back({name, pass, detail.str()});
  }
};

// analysis fixtures shared by the distance-set checks
struct SetData {
  PointSet set;
  DistanceStats stats;
  GridFunction spectrum;
  LevelSums levels;
};

std::vector<SetData> build_fixtures(const VerifyOptions& opt) {
  std::vector<SetData> out;
  auto add = [&](PointSet set) {
    SetData data{std::move(set), {}, {}, {}};
    data.stats = distance_stats(data.set, opt.threads);
    data.spectrum = dft(indicator(data.set), opt.threads);
    data.levels = level_sums_from_spectrum(data.spectrum);
    out.push_back(std::move(data));
  };
  for (std::int64_t q : primes_up_to(std::min<std::int64_t>(opt.max_q, 13))) {
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : opt.dims) {
      if (d < 2) continue;
      add(gen_full(ctx, d));
      add(gen_paraboloid(ctx, d));
      add(gen_sphere(ctx, d, 1));
      if (d == 2) add(gen_diagonal(ctx));
      add(gen_random(ctx, d, std::size_t(ceil_pow_half(q, d)), opt.seed));
      add(gen_random(ctx, d, std::size_t(ceil_pow_half(q, d + 1)), opt.seed + 1));
    }
  }
  return out;
}

std::string tag(const SetData& s) {
  return s.set.family + " q=" + std::to_string(s.set.q()) +
         " d=" + std::to_string(s.set.dim);
}

} // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
  Checker c;
  const auto primes = primes_up_to(opt.max_q);
  std::mt19937_64 rng(opt.seed);

  // --- field-core ---------------------------------------------------------
  c.begin("field_basics");
  for (std::int64_t q : primes) {
    FieldCtxPtr ctx = FieldCtx::make(q);
    std::complex<double> sum = 0.0;
    std::int64_t squares = 0;
    for (FieldElem a = 0; a < q; ++a) {
      sum += ctx->unit_root(a);
      if (ctx->legendre(a) == 1) ++squares;
      if (a != 0) {
        c.expect(ctx->mul(a, ctx->inverse(a)) == 1, "a*inv(a) != 1");
        c.expect(ctx->inverse(ctx->inverse(a)) == a, "inverse not involutive");
      }
    }
    c.expect(std::abs(sum) <= 1e-10, "complete character sum != 0 at q=" + std::to_string(q));
    c.expect(squares == (q - 1) / 2, "square count != (q-1)/2");
  }
  c.end();

  // --- fourier ------------------------------------------------------------
  c.begin("dft_roundtrip");
  for (std::int64_t q : {3, 5, 7, 11}) {
    if (q > opt.max_q) continue;
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : {1, 2, 3}) {
      GridFunction f = random_grid(ctx, d, rng);
      GridFunction back = idft(dft(f, opt.threads), opt.threads);
      double max_in = 0.0, max_err = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        max_in = std::max(max_in, std::abs(f[i]));
        max_err = std::max(max_err, std::abs(back[i] - f[i]));
      }
      c.expect(max_err <= 1e-9 * std::max(1.0, max_in),
               "round-trip error " + std::to_string(max_err));
    }
  }
  c.end();

  c.begin("plancherel_random");
  {
    int grids = 0;
    while (grids < 1000) {
      for (std::int64_t q : {3, 5, 7, 11}) {
        if (q > opt.max_q) continue;
        for (int d : {1, 2, 3}) {
          FieldCtxPtr ctx = FieldCtx::make(q);
          const PowerSum p = power_sum(random_grid(ctx, d, rng), opt.threads);
          c.expect(std::abs(p.spectral - p.spatial) <= 1e-9 * std::max(1.0, p.spatial),
                   "plancherel mismatch q=" + std::to_string(q));
          ++grids;
        }
      }
    }
  }
  c.end();

  c.begin("dft_linearity");
  for (std::int64_t q : {3, 7}) {
    if (q > opt.max_q) continue;
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : {1, 2}) {
      GridFunction f = random_grid(ctx, d, rng), g = random_grid(ctx, d, rng);
      const std::complex<double> alpha{1.25, -0.5}, beta{-0.75, 2.0};
      GridFunction combo(ctx, d);
      for (std::size_t i = 0; i < combo.size(); ++i)
        combo[i] = alpha * f[i] + beta * g[i];
      GridFunction lhs = dft(combo, opt.threads);
      GridFunction fh = dft(f, opt.threads), gh = dft(g, opt.threads);
      for (std::size_t i = 0; i < lhs.size(); ++i)
        c.expect(std::abs(lhs[i] - (alpha * fh[i] + beta * gh[i])) <= 1e-10,
                 "linearity violated");
    }
  }
  c.end();

  c.begin("dft_vs_naive");
  for (std::int64_t q : primes) {
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d = 1; dpow(double(q), d) <= 243.0; ++d) {
      GridFunction f = random_grid(ctx, d, rng);
      GridFunction fast = dft(f, opt.threads);
      GridFunction slow = reference::naive_dft(f);
      for (std::size_t i = 0; i < fast.size(); ++i)
        c.expect(std::abs(fast[i] - slow[i]) <= 1e-10, "separable != naive");
    }
  }
  c.end();

  // --- char-sums ----------------------------------------------------------
  c.begin("gauss_magnitude");
  for (std::int64_t q : primes) {
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (FieldElem k = 1; k < q; ++k) {
      const SumValue g = gauss_g(k, *ctx);
      c.expect(std::abs(std::norm(g.value) - double(q)) <= 1e-8 * double(q),
               "|g(k)|^2 != q at q=" + std::to_string(q));
      if (q % 4 == 3)
        c.expect(std::abs(g.value.real()) <= 1e-9, "g(k) not purely imaginary");
    }
  }
  c.end();

  c.begin("gauss_G_closed_vs_brute");
  for (std::int64_t q : {3, 5, 7}) {
    if (q > opt.max_q) continue;
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : {1, 2}) {
      std::vector<FieldElem> m(d);
      const std::int64_t mspace = std::int64_t(dpow(double(q), d));
      for (std::int64_t mi = 0; mi < mspace; ++mi) {
        std::int64_t v = mi;
        for (int a = d - 1; a >= 0; --a) {
          m[a] = FieldElem(v % q);
          v /= q;
        }
        for (FieldElem k = 1; k < q; ++k) {
          const SumValue brute = gauss_G(m, k, *ctx, Method::brute);
          const SumValue closed = gauss_G(m, k, *ctx, Method::closed);
          c.expect(std::abs(brute.value - closed.value) <=
                       1e-9 * dpow(std::sqrt(double(q)), d),
                   "G closed != brute");
        }
      }
    }
  }
  c.end();

  c.begin("weil_bound");
  for (std::int64_t q : primes) {
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (FieldElem a = 0; a < q; ++a)
      for (FieldElem b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        c.expect(std::abs(kloosterman(a, b, *ctx).value) <=
                     2.0 * std::sqrt(double(q)) + 1e-9,
                 "Weil bound violated at q=" + std::to_string(q));
      }
  }
  c.end();

  c.begin("nt_lemma");
  for (std::int64_t q : primes) {
    FieldCtxPtr ctx = FieldCtx::make(q);
    const auto hist = diff_squares_hist(*ctx);
    c.expect(hist[0] == 2 * q - 1, "n(0) != 2q-1 at q=" + std::to_string(q));
    for (FieldElem t = 1; t < q; ++t)
      c.expect(hist[t] == q - 1, "n(t) != q-1 at q=" + std::to_string(q));
  }
  c.end();

  c.begin("sphere_closed_vs_dft");
  for (std::int64_t q : {3, 5, 7, 11}) {
    if (q > opt.max_q) continue;
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : opt.dims) {
      if (d < 2) continue;
      for (FieldElem r = 0; r < q; ++r) {
        const GridFunction hat = dft(indicator(gen_sphere(ctx, d, r)), opt.threads);
        std::vector<FieldElem> m(d);
        for (std::size_t i = 0; i < hat.size(); ++i) {
          hat.coords_of(i, m);
          const SumValue closed = sphere_fourier(r, m, *ctx, Method::closed);
          c.expect(std::abs(closed.value - hat[i]) <= 1e-9, "sphere closed != dft");
        }
      }
    }
  }
  c.end();

  c.begin("sphere_cardinality");
  for (std::int64_t q : primes) {
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : opt.dims) {
      if (d < 2) continue;
      // #S_t for all t via one histogram of |x|^2 over the grid
      std::vector<std::int64_t> counts(q, 0);
      GridFunction probe(ctx, d);
      std::vector<FieldElem> x(d);
      for (std::size_t i = 0; i < probe.size(); ++i) {
        probe.coords_of(i, x);
        std::uint64_t nsq = 0;
        for (FieldElem xi : x) nsq += std::uint64_t(xi) * xi % q;
        ++counts[nsq % q];
      }
      const double window = 2.0 * dpow(std::sqrt(double(q)), d - 1);
      for (FieldElem r = 1; r < q; ++r)
        c.expect(std::abs(double(counts[r]) - dpow(double(q), d - 1)) <= window,
                 "sphere cardinality outside window at q=" + std::to_string(q));
    }
  }
  c.end();

  c.begin("paraboloid_salem");
  for (std::int64_t q : {3, 5, 7, 11, 13}) {
    if (q > opt.max_q) continue;
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : opt.dims) {
      if (d < 2) continue;
      const double salem = salem_constant(gen_paraboloid(ctx, d), opt.threads);
      c.expect(std::abs(salem - 1.0) <= 1e-9,
               "paraboloid salem constant " + std::to_string(salem));
    }
  }
  c.end();

  c.begin("sphere_salem_dft");
  for (std::int64_t q : primes) {
    if (q > 31) break;
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : opt.dims) {
      if (d < 2) continue;
      for (FieldElem r = 1; r < q; ++r)
        c.expect(salem_constant(gen_sphere(ctx, d, r), opt.threads) <= 3.0,
                 "sphere salem constant > 3 at q=" + std::to_string(q));
    }
  }
  c.end();

  // same bound through the closed form, cheap enough for every prime in range
  c.begin("sphere_salem_closed");
  for (std::int64_t q : primes) {
    FieldCtxPtr ctx = FieldCtx::make(q);
    for (int d : opt.dims) {
      if (d < 2) continue;
      std::vector<std::int64_t> counts(q, 0);
      {
        GridFunction probe(ctx, d);
        std::vector<FieldElem> x(d);
        for (std::size_t i = 0; i < probe.size(); ++i) {
          probe.coords_of(i, x);
          std::uint64_t nsq = 0;
          for (FieldElem xi : x) nsq += std::uint64_t(xi) * xi % q;
          ++counts[nsq % q];
        }
      }
      for (FieldElem r = 1; r < q; ++r) {
        double max_abs = 0.0;
        for (FieldElem t = 0; t < q; ++t) {
          const bool attained = t == 0 ? counts[0] > 1 : counts[t] > 0;
          if (!attained) continue;
          max_abs = std::max(max_abs,
                             std::abs(sphere_fourier_level(r, t, false, d, *ctx).value));
        }
        const double denom =
            std::sqrt(double(counts[r])) / dpow(double(q), d);
        c.expect(max_abs / denom <= 3.0, "closed-form sphere salem > 3");
      }
    }
  }
  c.end();

  // --- mattila-analysis ----------------------------------------------------
  const std::vector<SetData> sets = build_fixtures(opt);

  c.begin("mattila_oracle_equivalence");
  for (const SetData& s : sets) {
    const double mf = mattila_fourier_from_level_sums(s.levels, s.set.npoints);
    const Rat128 me = mattila_exact(s.stats, s.set.dim);
    const double med = me.to_double();
    c.expect(std::abs(mf - med) <= 1e-6 * std::max(1.0, med),
             "M(q) routes disagree for " + tag(s));
    if (s.set.family == "full")
      c.expect(me == Rat128(1, Int128(dpow(double(s.set.q()), s.set.dim - 1))),
               "full-space M != q^(1-d)");
    if (s.set.family == "diagonal")
      c.expect(me == Rat128(2 * s.set.q() - 1, s.set.q()), "diagonal M != (2q-1)/q");
  }
  c.end();

  c.begin("nu_identity");
  for (const SetData& s : sets) {
    const double q = double(s.set.q());
    const double lhs = q * q * nu_hat_square_sum(s.stats);
    const double rhs = 1.0 + mattila_fourier_from_level_sums(s.levels, s.set.npoints) -
                       dpow(q, s.set.dim) / (double(s.set.npoints) * double(s.set.npoints));
    c.expect(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)),
             "q^2 sum|nu^|^2 identity fails for " + tag(s));
  }
  c.end();

  c.begin("nu_plancherel");
  for (const SetData& s : sets) {
    const double lhs = nu_hat_square_sum(s.stats);
    const double rhs = s.stats.nu_square_sum().to_double() / double(s.set.q());
    c.expect(std::abs(lhs - rhs) <= 1e-10, "nu plancherel fails for " + tag(s));
  }
  c.end();

  c.begin("cauchy_schwarz");
  for (const SetData& s : sets) {
    // exact: #Delta * sum_j hist(j)^2 >= (#E)^4
    const Int128 e2 = s.stats.total_pairs();
    c.expect(Int128(s.stats.delta.size()) * quadruple_count(s.stats) >= e2 * e2,
             "exact Cauchy-Schwarz fails for " + tag(s));
    const double cs = 1.0 / (double(s.set.q()) * nu_hat_square_sum(s.stats));
    c.expect(double(s.stats.delta.size()) >= cs - 1e-9,
             "float Cauchy-Schwarz fails for " + tag(s));
    c.expect(double(s.stats.delta.size()) >= std::ceil(cs - 1e-9),
             "ceil Cauchy-Schwarz fails for " + tag(s));
  }
  c.end();

  c.begin("hist_reconstruction");
  for (const SetData& s : sets) {
    const FieldElem q = s.set.q();
    std::vector<std::complex<double>> nh(q);
    for (FieldElem k = 0; k < q; ++k) nh[k] = nu_hat(s.stats, k);
    const double card2 = double(s.set.npoints) * double(s.set.npoints);
    for (FieldElem j = 0; j < q; ++j) {
      std::complex<double> nu_j = 0.0;
      for (FieldElem k = 0; k < q; ++k)
        nu_j += s.set.ctx->unit_root(std::int64_t(j) * k) * nh[k];
      c.expect(std::abs(card2 * nu_j.real() - double(s.stats.hist[j])) <= 1e-6 &&
                   std::abs(card2 * nu_j.imag()) <= 1e-6,
               "hist reconstruction fails for " + tag(s));
    }
  }
  c.end();

  // Salem => bounded M, with the exact constants of the square-function
  // split: M <= 2 q^(1-d) + 6 C^4 q^d / (#E)^2 whenever #E >= q^(d/2).
  c.begin("salem_implies_bounded_M");
  for (const SetData& s : sets) {
    const double q = double(s.set.q());
    const int d = s.set.dim;
    if (double(s.set.npoints) < dpow(std::sqrt(q), d)) continue;
    const double salem = salem_constant_from_spectrum(s.spectrum, s.set.npoints);
    const double bound = 2.0 / dpow(q, d - 1) +
                         6.0 * dpow(salem, 4) * dpow(q, d) /
                             (double(s.set.npoints) * double(s.set.npoints));
    c.expect(mattila_fourier_from_level_sums(s.levels, s.set.npoints) <=
                 bound * (1.0 + 1e-9),
             "Salem chain bound fails for " + tag(s));
  }
  c.end();

  c.begin("random_determinism");
  {
    FieldCtxPtr ctx = FieldCtx::make(11);
    const PointSet a = gen_random(ctx, 2, 40, 7);
    const PointSet b = gen_random(ctx, 2, 40, 7);
    const PointSet other = gen_random(ctx, 2, 40, 8);
    c.expect(a.coords == b.coords, "same seed gave different sets");
    c.expect(a.coords != other.coords, "different seeds gave identical sets");
    c.expect(a.npoints == 40, "wrong cardinality");
  }
  c.end();

  return c.results;
}

} // namespace ffdist
