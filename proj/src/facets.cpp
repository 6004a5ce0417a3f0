#include "tricone/facets.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "tricone/error.hpp"
#include "tricone/exact.hpp"
#include "tricone/parallel.hpp"
#include "tricone/simplex.hpp"

namespace tricone {

namespace {

constexpr std::size_t kMaxConstraints = 128;

// Zero set over at most 128 constraints.
struct Bits {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  void set(std::size_t i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return ((i < 64 ? lo : hi) >> (i % 64)) & 1u; }
  int count() const { return std::popcount(lo) + std::popcount(hi); }
  Bits operator&(const Bits& o) const { return {lo & o.lo, hi & o.hi}; }
  Bits operator|(const Bits& o) const { return {lo | o.lo, hi | o.hi}; }
};

// Rank of the constraint rows selected by `bits`, via 128-bit Bareiss.
std::size_t selected_rank(const std::vector<std::int64_t>& constraints, std::size_t dim, const Bits& bits,
                          std::vector<std::int64_t>& scratch) {
  scratch.clear();
  std::size_t rows = 0;
  for (std::size_t i = 0; i < kMaxConstraints; ++i) {
    if (!bits.test(i)) continue;
    scratch.insert(scratch.end(), constraints.begin() + static_cast<std::ptrdiff_t>(i * dim),
                   constraints.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim));
    ++rows;
  }
  return integer_rank(scratch, rows, dim);
}

struct RaySet {
  std::size_t dim = 0;
  std::vector<std::int64_t> coords;
  std::vector<Bits> zeros;

  std::size_t size() const { return zeros.size(); }
  const std::int64_t* ray(std::size_t i) const { return coords.data() + i * dim; }
  void push(const std::int64_t* r, Bits z) {
    coords.insert(coords.end(), r, r + dim);
    zeros.push_back(z);
  }
};

__int128 dot(const std::int64_t* a, const std::int64_t* b, std::size_t dim) {
  __int128 s = 0;
  for (std::size_t i = 0; i < dim; ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Positive combination of a positive-side ray p and a negative-side ray q that
// vanishes on the inserted constraint; primitive.
void combine(const std::int64_t* p, __int128 sp, const std::int64_t* q, __int128 sq, std::size_t dim,
             std::vector<__int128>& work, std::int64_t* out) {
  __int128 g = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    work[i] = sp * q[i] - sq * p[i];
    g = gcd128(g, work[i]);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    __int128 v = work[i] / g;
    if (v > INT64_MAX || v < INT64_MIN) {
      throw Error(ErrorKind::Integrity, "double description: ray coordinate overflow");
    }
    out[i] = static_cast<std::int64_t>(v);
  }
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

bool is_supporting(const WeightedGraph& y) {
  for (const Triangle& t : all_triangles(y.n()))
    if (triangle_sum(y, t) < 0) return false;
  return true;
}

FacetReport is_facet_normal(const WeightedGraph& y) {
  if (y.is_zero()) throw Error(ErrorKind::ZeroVector, "facet test on the zero vector");
  FacetReport report;
  report.required_rank = pair_count(y.n()) - 1;
  report.supporting = true;
  for (const Triangle& t : all_triangles(y.n())) {
    int s = cmp(triangle_sum(y, t), 0);
    if (s < 0) report.supporting = false;
    if (s == 0) report.zero_triangles.push_back(t);
  }
  report.zero_rank = triangle_rank(report.zero_triangles, y.n());
  report.facet = report.supporting && report.zero_rank == report.required_rank;
  return report;
}

FacetNormal make_facet_normal(const WeightedGraph& y) {
  WeightedGraph s = standard_form(y);
  FacetReport report = is_facet_normal(s);
  if (!report.facet) {
    throw Error(ErrorKind::Integrity,
                std::string("not a facet normal: ") +
                    (report.supporting ? "zero set rank " + std::to_string(report.zero_rank) + " < " +
                                             std::to_string(report.required_rank)
                                       : "negative on some triangle"));
  }
  return FacetNormal{std::move(s), std::move(report.zero_triangles)};
}

std::vector<std::vector<std::int64_t>> extreme_rays(std::span<const std::int64_t> constraint_span,
                                                    std::size_t rows, std::size_t dim,
                                                    const EnumerateOptions& options) {
  if (rows > kMaxConstraints) throw Error(ErrorKind::Unsupported, "too many constraints");
  if (constraint_span.size() != rows * dim) throw Error(ErrorKind::DimensionMismatch, "constraint shape");
  const std::vector<std::int64_t> constraints(constraint_span.begin(), constraint_span.end());
  auto row = [&](std::size_t i) { return constraints.data() + i * dim; };

  // Initial simplicial cone from the first independent constraints in order.
  std::vector<std::size_t> basis;
  std::vector<std::int64_t> picked;
  for (std::size_t i = 0; i < rows && basis.size() < dim; ++i) {
    std::vector<std::int64_t> trial = picked;
    trial.insert(trial.end(), row(i), row(i) + dim);
    if (integer_rank(trial, basis.size() + 1, dim) == basis.size() + 1) {
      basis.push_back(i);
      picked = std::move(trial);
    }
  }
  if (basis.size() < dim) throw Error(ErrorKind::InvalidInput, "constraint system is not full rank");

  RationalMatrix b(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) b(r, c) = static_cast<long>(row(basis[r])[c]);
  RationalMatrix inv = invert(b);

  RaySet rays;
  rays.dim = dim;
  std::vector<bool> inserted(rows, false);
  for (auto i : basis) inserted[i] = true;
  for (std::size_t k = 0; k < dim; ++k) {
    mpz_class l = 1;
    for (std::size_t r = 0; r < dim; ++r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), inv(r, k).get_den_mpz_t());
    std::vector<std::int64_t> ray(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      Rational v = inv(r, k) * l;
      ray[r] = v.get_num().get_si();
    }
    make_primitive(ray);
    Bits z;
    for (std::size_t j = 0; j < dim; ++j)
      if (j != k) z.set(basis[j]);
    rays.push(ray.data(), z);
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < rows; ++i)
    if (!inserted[i]) pending.push_back(i);

  std::size_t step = 0;
  const std::size_t total_steps = pending.size();
  while (!pending.empty()) {
    std::size_t pick = 0;
    if (options.order == InsertionOrder::MostViolatedFirst) {
      std::size_t worst = 0;
      for (std::size_t p = 0; p < pending.size(); ++p) {
        std::size_t negatives = 0;
        for (std::size_t r = 0; r < rays.size(); ++r)
          if (dot(row(pending[p]), rays.ray(r), dim) < 0) ++negatives;
        if (negatives > worst) {
          worst = negatives;
          pick = p;
        }
      }
    }
    const std::size_t ci = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    const std::int64_t* a = row(ci);

    std::vector<__int128> value(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(a, rays.ray(r), dim);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
    }

    // New rays from adjacent (positive, negative) pairs: the cardinality
    // pre-filter, then the exact rank test on the common tight constraints.
    std::vector<RaySet> produced(pos.size());
    const int need = static_cast<int>(dim) - 2;
    parallel_for(pos.size(), options.threads, [&](std::size_t pi) {
      std::vector<std::int64_t> scratch;
      std::vector<__int128> work(dim);
      std::vector<std::int64_t> fresh(dim);
      RaySet& out = produced[pi];
      out.dim = dim;
      const std::size_t p = pos[pi];
      for (std::size_t q : neg) {
        Bits common = rays.zeros[p] & rays.zeros[q];
        if (common.count() < need) continue;
        if (selected_rank(constraints, dim, common, scratch) != static_cast<std::size_t>(need)) continue;
        combine(rays.ray(p), value[p], rays.ray(q), value[q], dim, work, fresh.data());
        Bits z = common;
        z.set(ci);
        out.push(fresh.data(), z);
      }
    });

    RaySet next;
    next.dim = dim;
    std::size_t added = 0;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] < 0) continue;
      Bits z = rays.zeros[r];
      if (value[r] == 0) z.set(ci);
      next.push(rays.ray(r), z);
    }
    for (const auto& chunk : produced) {
      for (std::size_t r = 0; r < chunk.size(); ++r) next.push(chunk.ray(r), chunk.zeros[r]);
      added += chunk.size();
    }
    ++step;
    if (options.progress) {
      *options.progress << "step " << step << "/" << total_steps << ": constraint " << ci
                        << " rays " << next.size() << " (+" << added << " -" << neg.size() << ")\n";
    }
    rays = std::move(next);
  }

  std::unordered_set<std::vector<std::int64_t>, VectorHash> seen;
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    std::vector<std::int64_t> v(rays.ray(r), rays.ray(r) + dim);
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConeDescription enumerate_facets(int n, const EnumerateOptions& options) {
  if (n < 5 || n > 8) {
    throw Error(ErrorKind::Unsupported, "facet enumeration supports 5 <= n <= 8, got " + std::to_string(n));
  }
  const std::size_t dim = pair_count(n);
  const std::size_t rows = triple_count(n);
  IncidenceMatrix w(n);
  std::vector<std::int64_t> constraints(rows * dim, 0);
  for (std::size_t k = 0; k < rows; ++k)
    for (auto e : w.column_support(k)) constraints[k * dim + e] = 1;

  auto rays = extreme_rays(constraints, rows, dim, options);
  ConeDescription cone;
  cone.n = n;
  cone.facets.resize(rays.size());
  parallel_for(rays.size(), options.threads, [&](std::size_t i) {
    cone.facets[i] = make_facet_normal(WeightedGraph::from_integers(n, rays[i]));
  });
  return cone;
}

namespace {

std::vector<std::uint64_t> zero_mask(const FacetNormal& f) {
  std::vector<std::uint64_t> mask((triple_count(f.n()) + 63) / 64, 0);
  for (const Triangle& t : f.zero_triangles) {
    std::size_t k = triangle_index(t, f.n());
    mask[k / 64] |= std::uint64_t{1} << (k % 64);
  }
  return mask;
}

bool adjacent_masks(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                    const std::vector<Triangle>& triangles, int n, std::vector<std::int64_t>& scratch) {
  const std::size_t dim = pair_count(n);
  std::size_t common = 0;
  for (std::size_t i = 0; i < a.size(); ++i) common += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  if (common + 2 < dim) return false;
  scratch.assign(common * dim, 0);
  std::size_t r = 0;
  for (std::size_t k = 0; k < triangles.size(); ++k) {
    if (!((a[k / 64] & b[k / 64]) >> (k % 64) & 1u)) continue;
    for (const Edge& e : triangles[k].edges()) scratch[r * dim + edge_index(e, n)] = 1;
    ++r;
  }
  return integer_rank(scratch, common, dim) == dim - 2;
}

}  // namespace

bool are_adjacent(const FacetNormal& a, const FacetNormal& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::DimensionMismatch, "facets on different n");
  if (standard_form(a.vector) == standard_form(b.vector)) {
    throw Error(ErrorKind::InvalidInput, "adjacency of a facet with itself is undefined");
  }
  std::vector<std::int64_t> scratch;
  return adjacent_masks(zero_mask(a), zero_mask(b), all_triangles(a.n()), a.n(), scratch);
}

std::size_t facet_degree(const FacetNormal& rep, const ConeDescription& cone, unsigned threads) {
  auto self = std::find(cone.facets.begin(), cone.facets.end(), rep);
  if (self == cone.facets.end()) throw Error(ErrorKind::InvalidInput, "facet not in cone");
  const auto triangles = all_triangles(cone.n);
  const auto mask = zero_mask(rep);
  std::vector<char> adjacent(cone.facets.size(), 0);
  parallel_for(cone.facets.size(), threads, [&](std::size_t i) {
    if (cone.facets[i] == rep) return;
    std::vector<std::int64_t> scratch;
    adjacent[i] = adjacent_masks(mask, zero_mask(cone.facets[i]), triangles, cone.n, scratch);
  });
  return static_cast<std::size_t>(std::count(adjacent.begin(), adjacent.end(), 1));
}

FacetNormal sample_facet(int n, std::uint64_t seed, const SampleOptions& options) {
  if (n < 5) throw Error(ErrorKind::InvalidInput, "sampling needs n >= 5");
  if (options.range < 1) throw Error(ErrorKind::InvalidInput, "objective range must be positive");
  const std::size_t dim = pair_count(n);
  const std::size_t tri = triple_count(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-options.range, options.range);
  std::vector<Rational> objective(dim);
  for (auto& c : objective) c = static_cast<long>(dist(rng));

  // Dual of min <c,y> s.t. W^T y >= 0, <y,1> = 1:  max t s.t. W x + t 1 = c, x >= 0.
  // Columns: x_K, then t+ and t-.
  IncidenceMatrix w(n);
  RationalMatrix a(dim, tri + 2);
  for (std::size_t k = 0; k < tri; ++k)
    for (auto e : w.column_support(k)) a(e, k) = 1;
  for (std::size_t e = 0; e < dim; ++e) {
    a(e, tri) = 1;
    a(e, tri + 1) = -1;
  }
  std::vector<Rational> cost(tri + 2);
  cost[tri] = -1;
  cost[tri + 1] = 1;
  LpResult lp = minimize(a, objective, cost);
  if (lp.status != LpStatus::Optimal) {
    throw Error(ErrorKind::Integrity, "sampling LP did not reach an optimum");
  }
  std::vector<Rational> y(dim);
  for (std::size_t e = 0; e < dim; ++e) y[e] = -lp.y[e];
  WeightedGraph vertex(n, std::move(y));

  Rational total = 0;
  for (std::size_t e = 0; e < dim; ++e) total += vertex[e];
  if (total != 1) throw Error(ErrorKind::Integrity, "sampled point left the cross-section");
  return make_facet_normal(vertex);
}

void write_facet_list(std::ostream& out, int n, std::span<const WeightedGraph> vectors) {
  std::vector<const WeightedGraph*> sorted;
  for (const auto& v : vectors) {
    if (v.n() != n) throw Error(ErrorKind::DimensionMismatch, "facet list entry has the wrong size");
    sorted.push_back(&v);
  }
  std::sort(sorted.begin(), sorted.end(), [](const WeightedGraph* a, const WeightedGraph* b) { return *a < *b; });
  out << "n " << n << '\n';
  for (const WeightedGraph* p : sorted) {
    const WeightedGraph& v = *p;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ' ';
      out << v[i].get_str();
    }
    out << '\n';
  }
}

std::vector<WeightedGraph> read_facet_list(std::istream& in, int* n_out) {
  std::string line;
  int n = 0;
  std::vector<WeightedGraph> out;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n == 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n" || n < 2) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'n <int>' header");
      }
      continue;
    }
    std::vector<Rational> w;
    std::string tok;
    while (ls >> tok) {
      try {
        w.push_back(parse_rational(tok));
      } catch (const Error& e) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (w.size() != pair_count(n)) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(pair_count(n)) + " entries, got " +
                                        std::to_string(w.size()));
    }
    out.emplace_back(n, std::move(w));
  }
  if (n == 0) throw Error(ErrorKind::Parse, "missing 'n <int>' header");
  if (n_out) *n_out = n;
  return out;
}

}  // namespace tricone
