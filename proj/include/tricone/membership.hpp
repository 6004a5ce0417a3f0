#pragma once

// Membership in the triangle cone with exact certificates, and the metric
// polytope membership check.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tricone/graph.hpp"

namespace tricone {

enum class Verdict { Member, NonMember };

struct MembershipResult {
  Verdict verdict = Verdict::NonMember;
  /// Triangle coefficients in colex order; present iff member.
  std::optional<std::vector<Rational>> coefficients;
  /// Supporting vector s with ⟨s, g⟩ < 0, standard form; present iff non-member.
  std::optional<WeightedGraph> separator;
  std::size_t pivots = 0;
};

struct MembershipOptions {
  /// Replace the Farkas vector by a facet normal that still separates.
  bool facetize = false;
};

MembershipResult decide_membership(const WeightedGraph& g, const MembershipOptions& options = {});

/// Re-checks a certificate from scratch; never trusts the solver.
bool verify_certificate(const WeightedGraph& g, const MembershipResult& result);

/// Walks a separating supporting vector to a separating facet normal (n >= 5).
WeightedGraph facetize_separator(const WeightedGraph& separator, const WeightedGraph& g);

/// Necessary conditions for an exact triangle decomposition of a 0/1 graph.
/// Informational only; they are not part of the fractional verdict.
struct ArithmeticFlags {
  bool all_degrees_even = false;
  bool edge_count_divisible_by_3 = false;
};
ArithmeticFlags arithmetic_flags(const WeightedGraph& g);

enum class MetricConstraint { Nonnegativity, TriangleInequality, Perimeter };

struct MetricViolation {
  MetricConstraint kind = MetricConstraint::Nonnegativity;
  /// For triangle inequalities: d(a,c) <= d(a,b) + d(b,c) with `long_edge` = {a,c}.
  Triangle triangle;
  Edge long_edge;
  /// Amount by which the inequality fails (positive).
  Rational excess;

  std::string describe() const;
};

struct MetricReport {
  bool in_metric_cone = false;
  bool in_metric_polytope = false;
  std::vector<MetricViolation> violations;
  std::size_t tight_perimeter = 0;
};

MetricReport metric_polytope_contains(const WeightedGraph& d);

/// Certificate files: member -> `a b c num/den` per nonzero coefficient;
/// non-member -> one dense separator line.
void write_certificate(std::ostream& out, const WeightedGraph& g, const MembershipResult& result);
MembershipResult read_certificate(std::istream& in, int n, Verdict verdict);

/// Sparse weighted-graph format: `n <int>` then `u v w` lines, `#` comments.
WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g);

}  // namespace tricone
