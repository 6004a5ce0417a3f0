#pragma once

// The S_n action on edge-weighted graphs: relabelling, canonical forms,
// stabilizer orders and isomorphism classification.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tricone/graph.hpp"

namespace tricone {

/// A bijection on [n]; images[i-1] is the image of vertex i.
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<Vertex> images);
  static VertexPermutation identity(int n);
  /// Transposition (a b) on [n].
  static VertexPermutation transposition(int n, Vertex a, Vertex b);

  int n() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<Vertex>& images() const { return images_; }

  /// (this ∘ other)(v) = this(other(v)).
  VertexPermutation compose(const VertexPermutation& other) const;
  VertexPermutation inverse() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// y^α with (y^α)({α(u),α(v)}) = y({u,v}).
WeightedGraph permute(const WeightedGraph& y, const VertexPermutation& alpha);
std::vector<std::int64_t> permute(std::span<const std::int64_t> y, int n,
                                  const VertexPermutation& alpha);

struct CanonicalLabel {
  /// Lexicographically largest relabelling, colex coordinates.
  std::vector<std::int64_t> form;
  std::uint64_t stabilizer_order = 0;
  /// Vertex placed at each canonical position (1-based labels).
  std::vector<Vertex> ordering;
};

/// Canonical relabelling of an integer weighted graph (no rescaling).
CanonicalLabel canonical_label(std::span<const std::int64_t> y, int n);

/// Lex-largest element of the S_n-orbit of standard_form(y).
WeightedGraph canonical_form(const WeightedGraph& y);
std::uint64_t stabilizer_order(const WeightedGraph& y);
std::uint64_t orbit_size(const WeightedGraph& y);
std::uint64_t factorial(int n);

/// Sorted multiset of the n-1 weights at each vertex, one entry per vertex.
std::vector<std::vector<Rational>> vertex_invariants(const WeightedGraph& y);

struct FacetClass {
  WeightedGraph canonical_rep;
  std::uint64_t count = 0;
  std::uint64_t stabilizer_order = 0;
  int category = 0;
  /// Number of adjacent facets, -1 when not computed.
  std::int64_t degree = -1;

  std::uint64_t orbit_size() const;
};

struct ClassifyOptions {
  unsigned threads = 1;
};

/// Groups facets by canonical form; output sorted by canonical_rep.
std::vector<FacetClass> classify(std::span<const WeightedGraph> facets,
                                 const ClassifyOptions& options = {});

/// `rep;count;stab;category;degree`, rep as space-separated integers.
std::string format_class_row(const FacetClass& c);
FacetClass parse_class_row(const std::string& line, int n);
void write_class_csv(std::ostream& out, std::span<const FacetClass> classes);
std::vector<FacetClass> read_class_csv(std::istream& in, int n);

}  // namespace tricone
