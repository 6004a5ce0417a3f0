#pragma once

// Colex-indexed edge-weighted graphs on [n] and the edge/triangle inclusion
// matrix. Vertex labels are 1-based; coordinate indices are 0-based.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tricone {

using Rational = mpq_class;
using Vertex = int;

/// Parse "p", "p/q" or "-p/q" into a reduced rational. Throws Error(Parse).
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Number of vertex pairs, C(n,2).
constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}
/// Number of 3-subsets, C(n,3).
constexpr std::size_t triple_count(int n) {
  return n < 3 ? 0 : static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
}

struct Edge {
  Vertex u = 1;
  Vertex v = 2;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds {a,b} with a != b, sorting the endpoints.
Edge make_edge(Vertex a, Vertex b);

struct Triangle {
  std::array<Vertex, 3> vertices{1, 2, 3};

  bool contains(Vertex x) const {
    return vertices[0] == x || vertices[1] == x || vertices[2] == x;
  }
  std::array<Edge, 3> edges() const {
    return {Edge{vertices[0], vertices[1]}, Edge{vertices[0], vertices[2]},
            Edge{vertices[1], vertices[2]}};
  }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Builds a triangle from three distinct labels, sorting them.
Triangle make_triangle(Vertex a, Vertex b, Vertex c);

std::size_t edge_index(Edge e, int n);
Edge index_to_edge(std::size_t index, int n);
std::size_t triangle_index(const Triangle& t, int n);
Triangle index_to_triangle(std::size_t index, int n);

/// All triangles of [n] in colex order.
std::vector<Triangle> all_triangles(int n);
/// All edges of [n] in colex order.
std::vector<Edge> all_edges(int n);

/// A weight on every pair of [n], stored densely in colex order.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);
  WeightedGraph(int n, std::vector<Rational> weights);

  static WeightedGraph from_integers(int n, std::span<const std::int64_t> weights);

  int n() const { return n_; }
  std::size_t size() const { return weights_.size(); }

  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const Rational& weight(Edge e) const { return weights_[edge_index(e, n_)]; }
  void set(std::size_t i, Rational value);
  void set(Edge e, Rational value) { set(edge_index(e, n_), std::move(value)); }

  const std::vector<Rational>& weights() const { return weights_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Entries as int64; throws unless every entry is an integer that fits.
  std::vector<std::int64_t> to_integers() const;

  WeightedGraph scaled(const Rational& q) const;
  WeightedGraph operator+(const WeightedGraph& other) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b);
  /// Lexicographic comparison of the coordinate sequences (n first).
  friend std::strong_ordering operator<=>(const WeightedGraph& a, const WeightedGraph& b);

 private:
  int n_ = 0;
  std::vector<Rational> weights_;
};

WeightedGraph incidence_vector(const Triangle& t, int n);
WeightedGraph edge_vector(Edge e, int n);
WeightedGraph complete_graph(int n);
WeightedGraph graph_from_edges(int n, std::span<const std::pair<Edge, Rational>> edges);

Rational inner_product(const WeightedGraph& a, const WeightedGraph& b);
/// ⟨y, 1_K⟩ without materializing 1_K.
Rational triangle_sum(const WeightedGraph& y, const Triangle& t);

/// 0/1 matrix W with W(e,K) = 1 iff e ⊆ K; rows colex edges, columns colex triangles.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(int n);

  int n() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t edge, std::size_t triangle) const {
    return entries_[edge * cols_ + triangle];
  }
  /// Column K: the three edge indices of triangle K.
  const std::array<std::size_t, 3>& column_support(std::size_t triangle) const {
    return supports_[triangle];
  }

 private:
  int n_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
  std::vector<std::array<std::size_t, 3>> supports_;
};

IncidenceMatrix build_incidence_matrix(int n);

}  // namespace tricone
