#pragma once

// Named facet families, the vertex-splitting lift, the C4 x K_{6m+3}
// counterexample graph and structural checks on facet normals.

#include <optional>
#include <vector>

#include "tricone/exact.hpp"
#include "tricone/facets.hpp"

namespace tricone {

/// Vertex bipartition (A, [n] \ A).
struct CutPartition {
  int n = 0;
  std::vector<Vertex> side_a;

  std::vector<Vertex> side_b() const;
};

/// 1_e on [n], n >= 5.
FacetNormal trivial_facet(int n, Edge e);
/// -1 on {neg, center}, +1 on the other spokes at center; n >= 6.
FacetNormal star_facet(int n, Vertex center, Vertex neg);
/// 2 within each side, -1 across; both sides of size >= 2, n >= 5.
FacetNormal cut_facet(const CutPartition& p);
/// -1 on {1,2}, +1 on {1,a} for a in A and {2,b} for b in B; (A,B) partitions
/// {3..n}, both of size >= 3, n >= 8.
FacetNormal binary_star_facet(int n, const std::vector<Vertex>& a, const std::vector<Vertex>& b);
/// The graph from the binary-star discussion: K_{n-2} on A ∪ B, A joined to 2,
/// B joined to 1, plus {1,2}.
WeightedGraph binary_star_witness_graph(int n, const std::vector<Vertex>& a, const std::vector<Vertex>& b);

/// Splits vertex n into n and n+1. Throws Error(HypothesisFailure) unless some
/// triangle inside [n-1] has positive weight.
FacetNormal vertex_split(const FacetNormal& y);
/// The lifted vector without the hypothesis check or verification.
WeightedGraph split_vector(const WeightedGraph& y);

/// C4 lexicographic product with K_{6m+3}: four blocks in a 4-cycle.
WeightedGraph lex_product_c4(int m);
/// Vertices of block b (0..3) in lex_product_c4(m).
std::vector<Vertex> lex_product_block(int m, int b);

/// 0 if some entry is 0 mod 3; else 1 or 2 when all residues agree. Mixed
/// nonzero residues raise Error(Integrity). Requires standard form.
int mod3_category(const WeightedGraph& y);

struct SignExtremes {
  Rational max_positive;
  Rational min_negative;
  bool bounds_hold = false;
};
/// Largest positive entry a and smallest negative entry b, with -b/2 <= a <= -2b.
/// nullopt when y has no negative entry.
std::optional<SignExtremes> sign_extremes_check(const WeightedGraph& y);

struct SupportReport {
  bool bipartite = false;
  bool complete_bipartite = false;
};
/// The simple graph on the pairs with y(e) <= 0.
SupportReport nonpositive_support_check(const WeightedGraph& y);

/// Every edge lies in a zero-sum triangle of y.
bool zero_sum_edge_cover_check(const WeightedGraph& y);

/// Closed-form inverse of W for n = 5: rows triangles, columns edges.
RationalMatrix w5_inverse();

}  // namespace tricone
