#pragma once

// Facets of the triangle cone: verification of facet normals, enumeration by
// the double description method on the dual cone {y : y^T W >= 0}, adjacency,
// degrees and random sampling.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tricone/graph.hpp"

namespace tricone {

struct FacetReport {
  bool supporting = false;
  bool facet = false;
  std::vector<Triangle> zero_triangles;
  std::size_t zero_rank = 0;
  /// C(n,2) - 1, the rank a facet's zero set must reach.
  std::size_t required_rank = 0;
};

/// A verified facet normal in standard form with its zero-sum triangles.
struct FacetNormal {
  WeightedGraph vector;
  std::vector<Triangle> zero_triangles;

  int n() const { return vector.n(); }
  friend bool operator==(const FacetNormal& a, const FacetNormal& b) { return a.vector == b.vector; }
};

/// ⟨y, 1_K⟩ >= 0 for every triangle K.
bool is_supporting(const WeightedGraph& y);

/// Both facet-normal conditions with the evidence. Throws Error(ZeroVector).
FacetReport is_facet_normal(const WeightedGraph& y);

/// Standard form of y, verified. Throws Error(Integrity) when y is not a facet normal.
FacetNormal make_facet_normal(const WeightedGraph& y);

struct ConeDescription {
  int n = 0;
  std::vector<FacetNormal> facets;
};

enum class InsertionOrder { Colex, MostViolatedFirst };

struct EnumerateOptions {
  InsertionOrder order = InsertionOrder::Colex;
  /// Receives one line per inserted constraint when non-null.
  std::ostream* progress = nullptr;
  unsigned threads = 1;
};

/// All facet normals of the cone for 5 <= n <= 8, deduplicated and sorted.
ConeDescription enumerate_facets(int n, const EnumerateOptions& options = {});

/// Raw extreme rays of {y : a_i . y >= 0} for a full-rank, pointed system of
/// integer constraint rows. Returned primitive and sorted. Exposed for testing
/// the engine on cones other than the triangle cone.
std::vector<std::vector<std::int64_t>> extreme_rays(std::span<const std::int64_t> constraints,
                                                    std::size_t rows, std::size_t dim,
                                                    const EnumerateOptions& options = {});

/// Rank of the common zero set equals C(n,2) - 2. Throws on parallel inputs.
bool are_adjacent(const FacetNormal& a, const FacetNormal& b);

/// Number of facets in `cone` adjacent to `rep`. Throws if rep is not in cone.
std::size_t facet_degree(const FacetNormal& rep, const ConeDescription& cone, unsigned threads = 1);

struct SampleOptions {
  std::int64_t range = 1000;
};

/// Optimum of a seeded random objective over {y : y^T W >= 0, ⟨y,1⟩ = 1},
/// in standard form and verified.
FacetNormal sample_facet(int n, std::uint64_t seed, const SampleOptions& options = {});

/// Facet-list file: `n <int>` header then one dense vector per line.
void write_facet_list(std::ostream& out, int n, std::span<const WeightedGraph> vectors);
std::vector<WeightedGraph> read_facet_list(std::istream& in, int* n_out = nullptr);

}  // namespace tricone
