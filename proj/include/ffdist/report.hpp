#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ffdist/grid.hpp"
#include "ffdist/rational.hpp"

namespace ffdist {

enum class ReportFormat { csv, json };

/// One row per analyzed set: cardinalities, M(q) by both routes, the Salem
/// constant, and the ratio actual/bound for every theorem-level estimate.
struct AnalysisReport {
  FieldElem q = 0;
  int d = 0;
  std::string family;
  std::uint64_t seed = 0;
  std::size_t card_E = 0;
  std::size_t card_Delta = 0;
  double M_fourier = 0.0;
  Rat128 M_exact;
  double salem_const = 0.0;
  double cs_lower = 0.0;        // 1 / (q sum_k |nu^(k)|^2)
  double beta_measured = 0.0;   // -log_q max_{t!=0} S(t); +inf when the max is 0
  double ratio_mattila = 0.0;   // card_Delta / min{q, q/M}
  double ratio_trivial = 0.0;   // card_Delta / min{q, #E q^-(d-1)/2}
  double ratio_plug = 0.0;      // card_Delta / min{q, (#E)^3 q^-(2d-beta)}
  double ratio_something = 0.0; // max_{t!=0} S(t) / (q^-(d+1)/2 (#E)^2 q^-d)
  double ratio_conjecture = 0.0;// card_Delta / (#E)^(2/d)
  int falconer_ok = -1;         // 1/0 when #E >= ceil(q^(d+1)/2), -1 otherwise
  std::vector<std::string> flags;
};

std::string csv_header();
std::string csv_row(const AnalysisReport& r);
std::string json_row(const AnalysisReport& r);

/// Rows in the given format; CSV gets the header line, JSON an array.
void write_reports(std::span<const AnalysisReport> rows, ReportFormat format,
                   std::ostream& out);

/// Spectrum dump: columns m_1..m_d, re, im, abs2, row-major order.
void write_spectrum_csv(const GridFunction& spectrum, std::ostream& out);

/// Fixed-width round-trip formatting used for every floating-point field.
std::string fmt_double(double v);

} // namespace ffdist
