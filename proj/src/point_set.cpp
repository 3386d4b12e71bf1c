#include "ffdist/point_set.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ffdist {

namespace {

// q^d as uint64, for encoding points as single indices (no grid allocation)
std::uint64_t space_size(FieldElem q, int d) {
  if (d < 1) throw std::invalid_argument("point set dimension must be >= 1");
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    if (n > (std::uint64_t(1) << 62) / q)
      throw std::invalid_argument("q^d too large to index");
    n *= q;
  }
  return n;
}

std::uint64_t encode(std::span<const FieldElem> x, FieldElem q) {
  std::uint64_t idx = 0;
  for (FieldElem xi : x) idx = idx * q + xi;
  return idx;
}

PointSet from_indices(FieldCtxPtr ctx, int d, std::vector<std::uint64_t> idx,
                      std::string family, std::uint64_t seed) {
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::runtime_error("duplicate point in set '" + family + "'");
  if (idx.empty()) throw std::runtime_error("empty point set");

  PointSet set;
  set.ctx = std::move(ctx);
  set.dim = d;
  set.npoints = idx.size();
  set.coords.resize(idx.size() * d);
  const FieldElem q = set.ctx->q();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::uint64_t v = idx[i];
    for (int a = d - 1; a >= 0; --a) {
      set.coords[i * d + a] = FieldElem(v % q);
      v /= q;
    }
  }
  set.family = std::move(family);
  set.seed = seed;
  return set;
}

// unbiased draw in [0, bound) from raw mt19937_64 output; the distribution
// classes in <random> are not portable across standard libraries
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

} // namespace

PointSet gen_full(FieldCtxPtr ctx, int d) {
  const std::uint64_t n = space_size(ctx->q(), d);
  grid_size_checked(ctx->q(), d);
  std::vector<std::uint64_t> idx(n);
  for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
  return from_indices(std::move(ctx), d, std::move(idx), "full", 0);
}

PointSet gen_paraboloid(FieldCtxPtr ctx, int d) {
  if (d < 2) throw std::invalid_argument("paraboloid requires d >= 2");
  const FieldElem q = ctx->q();
  const std::uint64_t base = space_size(q, d - 1);
  std::vector<std::uint64_t> idx;
  idx.reserve(base);
  std::vector<FieldElem> x(d - 1, 0);
  for (std::uint64_t n = 0; n < base; ++n) {
    std::uint64_t nsq = 0;
    for (FieldElem xi : x) nsq += std::uint64_t(xi) * xi % q;
    idx.push_back(encode(x, q) * q + nsq % q);
    for (int i = d - 2; i >= 0 && ++x[i] == q; --i) x[i] = 0;
  }
  return from_indices(std::move(ctx), d, std::move(idx), "paraboloid", 0);
}

PointSet gen_sphere(FieldCtxPtr ctx, int d, FieldElem r) {
  if (d < 2) throw std::invalid_argument("sphere requires d >= 2");
  const FieldElem q = ctx->q();
  r %= q;
  const std::uint64_t n = space_size(q, d);
  std::vector<std::uint64_t> idx;
  std::vector<FieldElem> x(d, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t nsq = 0;
    for (FieldElem xi : x) nsq += std::uint64_t(xi) * xi % q;
    if (FieldElem(nsq % q) == r) idx.push_back(i);
    for (int a = d - 1; a >= 0 && ++x[a] == q; --a) x[a] = 0;
  }
  PointSet set = from_indices(std::move(ctx), d, std::move(idx),
                              "sphere(r=" + std::to_string(r) + ")", 0);
  set.degenerate = r == 0;
  return set;
}

PointSet gen_diagonal(FieldCtxPtr ctx) {
  const FieldElem q = ctx->q();
  std::vector<std::uint64_t> idx;
  idx.reserve(q);
  for (FieldElem k = 0; k < q; ++k) idx.push_back(std::uint64_t(k) * q + k);
  return from_indices(std::move(ctx), 2, std::move(idx), "diagonal", 0);
}

PointSet gen_random(FieldCtxPtr ctx, int d, std::size_t n, std::uint64_t seed) {
  const std::uint64_t space = space_size(ctx->q(), d);
  if (n < 1 || n > space)
    throw std::invalid_argument("random set cardinality must be in [1, q^d]");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> idx;

  if (n > space / 2) {
    // dense target: partial Fisher-Yates over the whole index space
    std::vector<std::uint64_t> all(space);
    for (std::uint64_t i = 0; i < space; ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i)
      std::swap(all[i], all[i + bounded(rng, space - i)]);
    idx.assign(all.begin(), all.begin() + n);
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(n * 2);
    while (seen.size() < n) seen.insert(bounded(rng, space));
    idx.assign(seen.begin(), seen.end());
  }
  return from_indices(std::move(ctx), d, std::move(idx),
                      "random(n=" + std::to_string(n) + ")", seed);
}

PointSet load_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file " + path.string());
  std::int64_t q = 0;
  int d = 0;
  if (!(in >> q >> d)) throw std::runtime_error("set file " + path.string() + ": bad header");
  FieldCtxPtr ctx = FieldCtx::make(q);
  if (d < 1) throw std::runtime_error("set file " + path.string() + ": bad dimension");

  std::vector<std::uint64_t> idx;
  std::vector<FieldElem> x(d);
  std::int64_t v;
  while (in >> v) {
    if (v < 0 || v >= q)
      throw std::runtime_error("set file " + path.string() + ": coordinate out of range");
    x[0] = FieldElem(v);
    for (int a = 1; a < d; ++a) {
      if (!(in >> v) || v < 0 || v >= q)
        throw std::runtime_error("set file " + path.string() + ": truncated point");
      x[a] = FieldElem(v);
    }
    idx.push_back(encode(x, FieldElem(q)));
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::runtime_error("set file " + path.string() + ": duplicate point");
  PointSet set = from_indices(std::move(ctx), d, std::move(idx),
                              "file(" + path.filename().string() + ")", 0);
  return set;
}

void save_set(const PointSet& set, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write set file " + path.string());
  out << set.q() << ' ' << set.dim << '\n';
  for (std::size_t i = 0; i < set.npoints; ++i) {
    const auto p = set.point(i);
    for (int a = 0; a < set.dim; ++a) out << p[a] << (a + 1 == set.dim ? '\n' : ' ');
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

GridFunction indicator(const PointSet& set) {
  GridFunction f(set.ctx, set.dim);
  for (std::size_t i = 0; i < set.npoints; ++i) f[f.index_of(set.point(i))] = 1.0;
  return f;
}

} // namespace ffdist
