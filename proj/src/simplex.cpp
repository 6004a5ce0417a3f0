#include "tricone/simplex.hpp"

#include <algorithm>
#include <optional>

#include "tricone/error.hpp"

namespace tricone {

namespace {

class Tableau {
 public:
  Tableau(const RationalMatrix& a, const std::vector<Rational>& b)
      : m_(a.rows()), n_(a.cols()), width_(a.cols() + a.rows() + 1), t_(m_ * width_),
        sign_(m_, 1), basis_(m_) {
    if (b.size() != m_) throw Error(ErrorKind::DimensionMismatch, "simplex: rhs length");
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j)
        if (a(i, j) != 0) at(i, j) = sign_[i] < 0 ? Rational(-a(i, j)) : a(i, j);
      at(i, n_ + i) = 1;
      rhs(i) = sign_[i] < 0 ? Rational(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
  }

  Rational& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  Rational& rhs(std::size_t i) { return t_[i * width_ + width_ - 1]; }

  // Reduced costs for the given column costs (size n_ + m_).
  std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) {
    std::vector<Rational> r(cost.begin(), cost.end());
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (at(i, j) != 0) r[j] -= cb * at(i, j);
    }
    return r;
  }

  void pivot(std::size_t row, std::size_t col, std::vector<Rational>& reduced) {
    Rational inv = 1 / at(row, col);
    for (std::size_t j = 0; j < width_; ++j)
      if (at(row, j) != 0) at(row, j) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      Rational f = at(i, col);
      for (std::size_t j = 0; j < width_; ++j)
        if (at(row, j) != 0) at(i, j) -= f * at(row, j);
    }
    if (reduced[col] != 0) {
      Rational f = reduced[col];
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (at(row, j) != 0) reduced[j] -= f * at(row, j);
    }
    basis_[row] = col;
    ++pivots_;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(std::vector<Rational>& reduced, std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j)
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& e = at(i, *enter);
        if (e <= 0) continue;
        Rational ratio = rhs(i) / e;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter, reduced);
    }
  }

  std::vector<Rational> primal() {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rhs(i);
    return x;
  }

  // y_i = cost(art_i) - reduced(art_i), mapped back through the row signs.
  std::vector<Rational> duals(const std::vector<Rational>& cost, const std::vector<Rational>& reduced) {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      y[i] = cost[n_ + i] - reduced[n_ + i];
      if (sign_[i] < 0) y[i] = -y[i];
    }
    return y;
  }

  // Moves zero-level artificials out of the basis where an original column allows it.
  void drive_out_artificials(std::vector<Rational>& reduced) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (at(i, j) != 0) {
          pivot(i, j, reduced);
          break;
        }
    }
  }

  Rational artificial_level() {
    Rational level = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= n_) level += rhs(i);
    return level;
  }

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rational> t_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

// Phase 1; returns the infeasibility certificate, or nullopt once the
// tableau holds a feasible basis.
std::optional<LpResult> phase_one(Tableau& tab) {
  std::vector<Rational> cost(tab.n() + tab.m());
  for (std::size_t i = 0; i < tab.m(); ++i) cost[tab.n() + i] = 1;
  auto reduced = tab.reduced_costs(cost);
  tab.run(reduced, tab.n() + tab.m());
  Rational level = tab.artificial_level();
  if (level > 0) {
    LpResult result;
    result.status = LpStatus::Infeasible;
    result.y = tab.duals(cost, reduced);
    result.objective = level;
    result.pivots = tab.pivots();
    return result;
  }
  tab.drive_out_artificials(reduced);
  return std::nullopt;
}

}  // namespace

LpResult find_feasible(const RationalMatrix& a, const std::vector<Rational>& b) {
  Tableau tab(a, b);
  if (auto infeasible = phase_one(tab)) return *infeasible;
  LpResult result;
  result.status = LpStatus::Optimal;
  result.x = tab.primal();
  result.objective = 0;
  result.pivots = tab.pivots();
  return result;
}

LpResult minimize(const RationalMatrix& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  if (c.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "simplex: cost length");
  Tableau tab(a, b);
  if (auto infeasible = phase_one(tab)) return *infeasible;
  std::vector<Rational> cost(a.cols() + a.rows());
  std::copy(c.begin(), c.end(), cost.begin());
  auto reduced = tab.reduced_costs(cost);
  LpResult result;
  if (!tab.run(reduced, tab.n())) {
    result.status = LpStatus::Unbounded;
    result.pivots = tab.pivots();
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x = tab.primal();
  result.y = tab.duals(cost, reduced);
  result.objective = 0;
  for (std::size_t j = 0; j < c.size(); ++j) result.objective += c[j] * result.x[j];
  result.pivots = tab.pivots();
  return result;
}

}  // namespace tricone
