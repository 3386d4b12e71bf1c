#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ffdist/char_sums.hpp"
#include "ffdist/fourier.hpp"
#include "ffdist/mattila.hpp"
#include "ffdist/numutil.hpp"
#include "ffdist/point_set.hpp"
#include "ffdist/report.hpp"
#include "ffdist/sweep.hpp"
#include "ffdist/verify.hpp"

namespace {

using namespace ffdist;

// exit codes: 0 success, 1 invariant failure, 2 bad input

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  return out;
}

int cmd_gen(const std::string& family, std::int64_t q, int d, std::int64_t r,
            std::int64_t n, std::uint64_t seed, const std::string& out) {
  FieldCtxPtr ctx = FieldCtx::make(q);
  PointSet set = [&] {
    const FamilySpec spec = parse_family(
        family == "sphere"   ? family + ":" + std::to_string(r)
        : family == "random" ? family + ":" + std::to_string(n)
                             : family);
    switch (spec.kind) {
      case FamilySpec::Kind::full: return gen_full(ctx, d);
      case FamilySpec::Kind::paraboloid: return gen_paraboloid(ctx, d);
      case FamilySpec::Kind::sphere: return gen_sphere(ctx, d, spec.r);
      case FamilySpec::Kind::diagonal: return gen_diagonal(ctx);
      case FamilySpec::Kind::random: return gen_random(ctx, d, std::size_t(spec.n), seed);
    }
    throw std::logic_error("unreachable");
  }();
  save_set(set, out);
  std::cout << "wrote " << set.npoints << " points (" << set.family << ", q=" << q
            << ", d=" << set.dim << ") to " << out << "\n";
  return 0;
}

int cmd_analyze(const std::string& input, const std::string& out,
                const std::string& format, const std::string& spectrum_out, int jobs) {
  const PointSet set = load_set(input);
  grid_size_checked(set.q(), set.dim);
  const AnalysisReport row = bound_report(set, jobs);
  const ReportFormat fmt = format == "json" ? ReportFormat::json : ReportFormat::csv;
  if (out.empty()) {
    write_reports({&row, 1}, fmt, std::cout);
  } else {
    auto f = open_out(out);
    write_reports({&row, 1}, fmt, f);
  }
  if (!spectrum_out.empty()) {
    auto f = open_out(spectrum_out);
    write_spectrum_csv(dft(indicator(set), jobs), f);
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_override,
              int jobs_override) {
  SweepConfig config = parse_sweep_config(config_path);
  if (jobs_override > 0) config.jobs = jobs_override;
  if (!out_override.empty()) config.out = out_override;
  const std::vector<AnalysisReport> rows = run_sweep(config);
  if (config.out.empty()) {
    write_reports(rows, config.format, std::cout);
  } else {
    auto f = open_out(config.out);
    write_reports(rows, config.format, f);
  }
  return 0;
}

int cmd_verify(std::int64_t max_q, const std::vector<int>& dims, int jobs) {
  VerifyOptions opt;
  opt.max_q = max_q;
  if (!dims.empty()) opt.dims = dims;
  opt.threads = jobs;
  const auto results = run_verify(opt);
  bool all_pass = true;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    all_pass &= r.pass;
  }
  std::cout << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES\n");
  return all_pass ? 0 : 1;
}

int cmd_sums(const std::string& kind, std::int64_t q, int d, const std::string& out) {
  FieldCtxPtr ctx = FieldCtx::make(q);
  std::ostringstream table;
  table << "kind,param1,param2,re,im,abs,bound,ok\n";
  const double tol = 1e-9;
  auto row = [&](const std::string& k, std::int64_t p1, std::int64_t p2,
                 std::complex<double> v, double bound, bool ok) {
    table << k << ',' << p1 << ',' << p2 << ',' << fmt_double(v.real()) << ','
          << fmt_double(v.imag()) << ',' << fmt_double(std::abs(v)) << ','
          << fmt_double(bound) << ',' << (ok ? 1 : 0) << '\n';
  };

  if (kind == "gauss") {
    for (FieldElem k = 0; k < q; ++k) {
      const SumValue g = gauss_g(k, *ctx);
      const double bound = k == 0 ? double(q) : std::sqrt(double(q));
      row("gauss", k, 0, g.value, bound, std::abs(std::abs(g.value) - bound) <= tol * bound);
    }
  } else if (kind == "gaussG") {
    // closed form depends on m only through t = |m|^2
    for (FieldElem k = 1; k < q; ++k)
      for (FieldElem t = 0; t < q; ++t) {
        const FieldElem w = ctx->mul(ctx->inverse(ctx->reduce(4 * std::int64_t(k))), t);
        std::complex<double> g = ctx->unit_root(w);
        std::complex<double> gk = gauss_g(ctx->neg(k), *ctx).value;
        for (int i = 0; i < d; ++i) g *= gk;
        const double bound = dpow(std::sqrt(double(q)), d);
        row("gaussG", k, t, g, bound, std::abs(std::abs(g) - bound) <= tol * bound);
      }
  } else if (kind == "kloosterman") {
    for (FieldElem a = 0; a < q; ++a)
      for (FieldElem b = 0; b < q; ++b) {
        const SumValue kv = kloosterman(a, b, *ctx);
        const double bound = (a == 0 && b == 0) ? double(q - 1) : 2.0 * std::sqrt(double(q));
        row("kloosterman", a, b, kv.value, bound, std::abs(kv.value) <= bound + tol);
      }
  } else if (kind == "nt") {
    const auto hist = diff_squares_hist(*ctx);
    for (FieldElem t = 0; t < q; ++t) {
      const std::int64_t expected = t == 0 ? 2 * q - 1 : q - 1;
      row("nt", t, 0, double(hist[t]), double(expected), hist[t] == expected);
    }
  } else if (kind == "sphere") {
    const double bound = 2.0 / dpow(std::sqrt(double(q)), d + 1) *
                         (1.0 + 1.0 / std::sqrt(double(q)));
    for (FieldElem r = 0; r < q; ++r)
      for (FieldElem t = 0; t < q; ++t) {
        const SumValue s = sphere_fourier_level(r, t, false, d, *ctx);
        row("sphere", r, t, s.value, bound, std::abs(s.value) <= bound + tol);
      }
  } else {
    throw std::runtime_error("unknown sums kind '" + kind +
                             "' (expected gauss|gaussG|kloosterman|nt|sphere)");
  }

  if (out.empty()) {
    std::cout << table.str();
  } else {
    auto f = open_out(out);
    f << table.str();
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field distance-set Fourier toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a point set file");
  std::string gen_family;
  std::int64_t gen_q = 0, gen_r = 1, gen_n = 0;
  int gen_d = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--family", gen_family, "full|paraboloid|sphere|diagonal|random")
      ->required();
  gen->add_option("--q", gen_q, "odd prime modulus")->required();
  gen->add_option("--d", gen_d, "dimension (default 2)");
  gen->add_option("--r", gen_r, "sphere radius");
  gen->add_option("--n", gen_n, "random-set cardinality");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "output set file")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full analysis of one set file");
  std::string an_input, an_out, an_format = "csv", an_spectrum;
  int an_jobs = 0;
  analyze->add_option("input", an_input, "set file")->required();
  analyze->add_option("--out", an_out, "report file (default stdout)");
  analyze->add_option("--format", an_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--spectrum", an_spectrum, "dump the indicator spectrum CSV");
  analyze->add_option("--jobs", an_jobs, "kernel threads (0 = all)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "analyze a Cartesian product of sets");
  std::string sw_config, sw_out;
  int sw_jobs = 0;
  sweep->add_option("config", sw_config, "key=value config file")->required();
  sweep->add_option("--out", sw_out, "override the config output path");
  sweep->add_option("--jobs", sw_jobs, "worker count override");

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  std::int64_t vf_max_q = 31;
  std::vector<int> vf_dims;
  int vf_jobs = 0;
  verify->add_option("--max-q", vf_max_q, "largest prime to test (default 31)");
  verify->add_option("--dims", vf_dims, "dimensions to test (default 2 3)");
  verify->add_option("--jobs", vf_jobs, "kernel threads (0 = all)");

  // sums
  auto* sums = app.add_subcommand("sums", "dump character-sum tables");
  std::string sm_kind, sm_out;
  std::int64_t sm_q = 0;
  int sm_d = 2;
  sums->add_option("--kind", sm_kind, "gauss|gaussG|kloosterman|nt|sphere")->required();
  sums->add_option("--q", sm_q, "odd prime modulus")->required();
  sums->add_option("--d", sm_d, "dimension for gaussG/sphere (default 2)");
  sums->add_option("--out", sm_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*gen) return cmd_gen(gen_family, gen_q, gen_d, gen_r, gen_n, gen_seed, gen_out);
    if (*analyze) return cmd_analyze(an_input, an_out, an_format, an_spectrum, an_jobs);
    if (*sweep) return cmd_sweep(sw_config, sw_out, sw_jobs);
    if (*verify) return cmd_verify(vf_max_q, vf_dims, vf_jobs);
    if (*sums) return cmd_sums(sm_kind, sm_q, sm_d, sm_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
