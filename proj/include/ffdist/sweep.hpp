#pragma once

#include <filesystem>
#include <optional>

#include "ffdist/report.hpp"

namespace ffdist {

/// One generator spec inside a sweep.  Random cardinality is either fixed or
/// one of the symbolic sizes tied to (q, d):
///   qhalf = ceil(q^(d/2)),  qcrit = ceil(q^((d+1)/2)).
struct FamilySpec {
  enum class Kind { full, paraboloid, sphere, diagonal, random };
  enum class Card { fixed, qhalf, qcrit };

  Kind kind = Kind::full;
  FieldElem r = 1;            // sphere radius
  Card card = Card::fixed;    // random cardinality rule
  std::int64_t n = 0;         // fixed random cardinality

  std::string label() const;
};

/// Parsed from a key=value config file; see parse_sweep_config.
struct SweepConfig {
  std::vector<std::int64_t> primes;
  std::vector<int> dims;
  std::vector<FamilySpec> families;
  std::vector<std::uint64_t> seeds{0};
  std::string out;  // empty = stdout
  ReportFormat format = ReportFormat::csv;
  int jobs = 1;
};

/// Family token grammar: full | paraboloid | diagonal | sphere:R |
/// random:N | random:qhalf | random:qcrit.
FamilySpec parse_family(const std::string& token);

/// key=value lines, '#' comments, comma-separated lists.  Keys: primes, dims,
/// families, seeds, out, format, jobs.  Throws std::runtime_error on bad input.
SweepConfig parse_sweep_config(const std::filesystem::path& path);

/// Cartesian product of the config axes, independent rows analyzed
/// concurrently, row order sorted by (q, d, family, seed) regardless of the
/// worker count.  Diagonal rows are emitted for d = 2 only; seeds multiply
/// random families only.
std::vector<AnalysisReport> run_sweep(const SweepConfig& config);

} // namespace ffdist
