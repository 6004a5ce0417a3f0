#pragma once

// Dense two-phase simplex over exact rationals with Bland's pivoting rule.
// Standard form: minimize c.x subject to A x = b, x >= 0.

#include <vector>

#include "tricone/exact.hpp"

namespace tricone {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  /// Optimal: dual prices y with c_j - y.A_j >= 0 for every column.
  /// Infeasible: Farkas vector y with y.A_j <= 0 for every column and y.b > 0.
  std::vector<Rational> y;
  Rational objective;
  std::size_t pivots = 0;
};

/// Phase 1 only; the objective is ignored. Cheaper when only a feasible
/// point (or an infeasibility certificate) is wanted.
LpResult find_feasible(const RationalMatrix& a, const std::vector<Rational>& b);

LpResult minimize(const RationalMatrix& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

}  // namespace tricone
