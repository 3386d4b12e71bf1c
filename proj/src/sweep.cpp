#include "ffdist/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ffdist/mattila.hpp"
#include "ffdist/numutil.hpp"
#include "ffdist/point_set.hpp"

namespace ffdist {

std::string FamilySpec::label() const {
  switch (kind) {
    case Kind::full: return "full";
    case Kind::paraboloid: return "paraboloid";
    case Kind::diagonal: return "diagonal";
    case Kind::sphere: return "sphere(r=" + std::to_string(r) + ")";
    case Kind::random:
      if (card == Card::qhalf) return "random(n=qhalf)";
      if (card == Card::qcrit) return "random(n=qcrit)";
      return "random(n=" + std::to_string(n) + ")";
  }
  return {};
}

FamilySpec parse_family(const std::string& token) {
  FamilySpec spec;
  const auto colon = token.find(':');
  const std::string head = token.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : token.substr(colon + 1);

  if (head == "full" || head == "paraboloid" || head == "diagonal") {
    if (!arg.empty()) throw std::runtime_error("family '" + head + "' takes no parameter");
    spec.kind = head == "full"         ? FamilySpec::Kind::full
                : head == "paraboloid" ? FamilySpec::Kind::paraboloid
                                       : FamilySpec::Kind::diagonal;
    return spec;
  }
  if (head == "sphere") {
    spec.kind = FamilySpec::Kind::sphere;
    if (arg.empty()) throw std::runtime_error("sphere family needs a radius, e.g. sphere:1");
    spec.r = FieldElem(std::stoul(arg));
    return spec;
  }
  if (head == "random") {
    spec.kind = FamilySpec::Kind::random;
    if (arg == "qhalf")
      spec.card = FamilySpec::Card::qhalf;
    else if (arg == "qcrit")
      spec.card = FamilySpec::Card::qcrit;
    else if (!arg.empty()) {
      spec.card = FamilySpec::Card::fixed;
      spec.n = std::stoll(arg);
      if (spec.n < 1) throw std::runtime_error("random cardinality must be >= 1");
    } else {
      throw std::runtime_error("random family needs a cardinality, e.g. random:qhalf");
    }
    return spec;
  }
  throw std::runtime_error("unknown family '" + token + "'");
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    items.push_back(item.substr(b, e - b + 1));
  }
  return items;
}

struct Job {
  std::int64_t q;
  int d;
  FamilySpec spec;
  std::uint64_t seed;
};

PointSet build_set(const Job& job) {
  FieldCtxPtr ctx = FieldCtx::make(job.q);
  switch (job.spec.kind) {
    case FamilySpec::Kind::full: return gen_full(ctx, job.d);
    case FamilySpec::Kind::paraboloid: return gen_paraboloid(ctx, job.d);
    case FamilySpec::Kind::sphere: return gen_sphere(ctx, job.d, job.spec.r);
    case FamilySpec::Kind::diagonal: return gen_diagonal(ctx);
    case FamilySpec::Kind::random: {
      std::int64_t n = job.spec.n;
      if (job.spec.card == FamilySpec::Card::qhalf) n = ceil_pow_half(job.q, job.d);
      if (job.spec.card == FamilySpec::Card::qcrit) n = ceil_pow_half(job.q, job.d + 1);
      return gen_random(ctx, job.d, std::size_t(n), job.seed);
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace

SweepConfig parse_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());

  SweepConfig config;
  config.seeds.clear();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected key=value");
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    const std::string value = line.substr(eq + 1);

    if (key == "primes")
      for (const auto& s : split_list(value)) config.primes.push_back(std::stoll(s));
    else if (key == "dims")
      for (const auto& s : split_list(value)) config.dims.push_back(std::stoi(s));
    else if (key == "families")
      for (const auto& s : split_list(value)) config.families.push_back(parse_family(s));
    else if (key == "seeds")
      for (const auto& s : split_list(value)) config.seeds.push_back(std::stoull(s));
    else if (key == "out") {
      const auto b = value.find_first_not_of(" \t");
      config.out = b == std::string::npos ? "" : value.substr(b, value.find_last_not_of(" \t") - b + 1);
    } else if (key == "format") {
      const auto fmt = split_list(value);
      if (fmt.size() != 1 || (fmt[0] != "csv" && fmt[0] != "json"))
        throw std::runtime_error("format must be csv or json");
      config.format = fmt[0] == "csv" ? ReportFormat::csv : ReportFormat::json;
    } else if (key == "jobs") {
      config.jobs = std::stoi(value);
    } else {
      throw std::runtime_error("unknown config key '" + key + "'");
    }
  }

  if (config.seeds.empty()) config.seeds.push_back(0);
  for (std::int64_t q : config.primes)
    if (!is_odd_prime(q)) throw std::runtime_error("primes must be odd primes");
  for (int d : config.dims)
    if (d < 1) throw std::runtime_error("dims must be >= 1");
  if (config.primes.empty() || config.dims.empty() || config.families.empty())
    throw std::runtime_error("config needs primes, dims and at least one family");
  if (config.jobs < 1) throw std::runtime_error("jobs must be >= 1");
  return config;
}

std::vector<AnalysisReport> run_sweep(const SweepConfig& config) {
  std::vector<Job> jobs;
  for (std::int64_t q : config.primes)
    for (int d : config.dims)
      for (const FamilySpec& spec : config.families) {
        if (spec.kind == FamilySpec::Kind::diagonal && d != 2) continue;
        if (spec.kind == FamilySpec::Kind::random)
          for (std::uint64_t seed : config.seeds) jobs.push_back({q, d, spec, seed});
        else
          jobs.push_back({q, d, spec, 0});
      }

  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return std::tuple(a.q, a.d, a.spec.label(), a.seed) <
           std::tuple(b.q, b.d, b.spec.label(), b.seed);
  });

  // grid guard up front: reject the whole sweep rather than fail mid-run
  for (const Job& job : jobs) grid_size_checked(FieldElem(job.q), job.d);

  std::vector<AnalysisReport> rows(jobs.size());
  std::string error;
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
  for (std::int64_t i = 0; i < std::int64_t(jobs.size()); ++i) {
    try {
      // inner kernels run on the worker's single thread; nested teams stay off
      rows[i] = bound_report(build_set(jobs[i]), 1);
    } catch (const std::exception& e) {
#pragma omp critical
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error("sweep failed: " + error);
  return rows;
}

} // namespace ffdist
