#include "ffdist/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ffdist {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string join_flags(const std::vector<std::string>& flags) {
  std::string s;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) s += ';';
    s += flags[i];
  }
  return s;
}

std::string falconer_str(int v) { return v < 0 ? "na" : std::to_string(v); }

} // namespace

std::string csv_header() {
  return "q,d,family,seed,card_E,card_Delta,M_fourier,M_exact_num,M_exact_den,"
         "salem_const,cs_lower,beta_measured,ratio_mattila,ratio_trivial,"
         "ratio_plug,ratio_something,ratio_conjecture,falconer_ok,flags";
}

std::string csv_row(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.q << ',' << r.d << ',' << r.family << ',' << r.seed << ',' << r.card_E
      << ',' << r.card_Delta << ',' << fmt_double(r.M_fourier) << ','
      << to_string(r.M_exact.num) << ',' << to_string(r.M_exact.den) << ','
      << fmt_double(r.salem_const) << ',' << fmt_double(r.cs_lower) << ','
      << fmt_double(r.beta_measured) << ',' << fmt_double(r.ratio_mattila) << ','
      << fmt_double(r.ratio_trivial) << ',' << fmt_double(r.ratio_plug) << ','
      << fmt_double(r.ratio_something) << ',' << fmt_double(r.ratio_conjecture)
      << ',' << falconer_str(r.falconer_ok) << ',' << join_flags(r.flags);
  return out.str();
}

std::string json_row(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["q"] = r.q;
  j["d"] = r.d;
  j["family"] = r.family;
  j["seed"] = r.seed;
  j["card_E"] = r.card_E;
  j["card_Delta"] = r.card_Delta;
  j["M_fourier"] = r.M_fourier;
  j["M_exact_num"] = to_string(r.M_exact.num);
  j["M_exact_den"] = to_string(r.M_exact.den);
  j["salem_const"] = r.salem_const;
  j["cs_lower"] = r.cs_lower;
  // infinities are not representable in JSON; keep the round-trip string
  j["beta_measured"] = fmt_double(r.beta_measured);
  j["ratio_mattila"] = r.ratio_mattila;
  j["ratio_trivial"] = r.ratio_trivial;
  j["ratio_plug"] = r.ratio_plug;
  j["ratio_something"] = r.ratio_something;
  j["ratio_conjecture"] = r.ratio_conjecture;
  j["falconer_ok"] = falconer_str(r.falconer_ok);
  j["flags"] = r.flags;
  return j.dump();
}

void write_reports(std::span<const AnalysisReport> rows, ReportFormat format,
                   std::ostream& out) {
  if (format == ReportFormat::csv) {
    out << csv_header() << '\n';
    for (const AnalysisReport& r : rows) out << csv_row(r) << '\n';
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << "  " << json_row(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    out << "]\n";
  }
}

void write_spectrum_csv(const GridFunction& spectrum, std::ostream& out) {
  const int d = spectrum.dim;
  for (int a = 1; a <= d; ++a) out << 'm' << a << ',';
  out << "re,im,abs2\n";
  std::vector<FieldElem> m(d);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    spectrum.coords_of(i, m);
    for (int a = 0; a < d; ++a) out << m[a] << ',';
    const std::complex<double> v = spectrum[i];
    out << fmt_double(v.real()) << ',' << fmt_double(v.imag()) << ','
        << fmt_double(std::norm(v)) << '\n';
  }
}

} // namespace ffdist
