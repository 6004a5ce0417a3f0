#include <doctest.h>

#include <random>

#include "tricone/simplex.hpp"

using namespace tricone;

namespace {

RationalMatrix matrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values) {
  RationalMatrix m(rows, cols);
  auto it = values.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = *it++;
  return m;
}

std::vector<Rational> vec(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

bool feasible_point(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& x) {
  for (const auto& v : x)
    if (v < 0) return false;
  return a * std::span<const Rational>(x) == b;
}

// Farkas: y.A <= 0 columnwise and y.b > 0.
bool farkas(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& y) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += y[r] * a(r, c);
    if (s > 0) return false;
  }
  Rational yb = 0;
  for (std::size_t r = 0; r < b.size(); ++r) yb += y[r] * b[r];
  return yb > 0;
}

}  // namespace

TEST_CASE("optimal LP with slack columns") {
  // max x1 + x2 s.t. x1 + 2 x2 <= 4, 3 x1 + x2 <= 6  ->  optimum 14/5 at (8/5, 6/5).
  auto a = matrix(2, 4, {1, 2, 1, 0, 3, 1, 0, 1});
  auto b = vec({4, 6});
  auto c = vec({-1, -1, 0, 0});
  LpResult r = minimize(a, b, c);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rational(-14, 5));
  CHECK(r.x[0] == Rational(8, 5));
  CHECK(r.x[1] == Rational(6, 5));
  CHECK(feasible_point(a, b, r.x));
  // Dual feasibility: c_j - y.A_j >= 0 and strong duality y.b = objective.
  Rational yb = 0;
  for (std::size_t i = 0; i < 2; ++i) yb += r.y[i] * b[i];
  CHECK(yb == r.objective);
  for (std::size_t j = 0; j < 4; ++j) {
    Rational reduced = c[j];
    for (std::size_t i = 0; i < 2; ++i) reduced -= r.y[i] * a(i, j);
    CHECK(reduced >= 0);
  }
}

TEST_CASE("negative right-hand sides are handled") {
  auto a = matrix(1, 2, {-1, -1});
  auto b = vec({-3});
  LpResult r = minimize(a, b, vec({1, 2}));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == 3);
  CHECK(feasible_point(a, b, r.x));
}

TEST_CASE("infeasible systems yield a Farkas vector") {
  auto a = matrix(2, 2, {1, 1, 1, 1});
  auto b = vec({1, 2});
  LpResult r = find_feasible(a, b);
  REQUIRE(r.status == LpStatus::Infeasible);
  CHECK(farkas(a, b, r.y));
  auto a2 = matrix(1, 3, {1, 2, 3});
  auto b2 = vec({-1});
  LpResult r2 = minimize(a2, b2, vec({0, 0, 0}));
  REQUIRE(r2.status == LpStatus::Infeasible);
  CHECK(farkas(a2, b2, r2.y));
}

TEST_CASE("unbounded objective is detected") {
  auto a = matrix(1, 2, {1, -1});
  auto b = vec({1});
  CHECK(minimize(a, b, vec({-1, 0})).status == LpStatus::Unbounded);
}

TEST_CASE("redundant equality rows are tolerated") {
  auto a = matrix(3, 3, {1, 1, 0, 0, 1, 1, 1, 2, 1});
  auto b = vec({2, 3, 5});
  LpResult r = minimize(a, b, vec({1, 1, 1}));
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(feasible_point(a, b, r.x));
  CHECK(r.objective == 3);
}

TEST_CASE("degenerate cycling example terminates under Bland's rule") {
  // Beale's example in equality form with three slack columns.
  RationalMatrix a(3, 7);
  std::vector<std::vector<Rational>> rows{
      {Rational(1, 4), -8, -1, 9, 1, 0, 0},
      {Rational(1, 2), -12, Rational(-1, 2), 3, 0, 1, 0},
      {0, 0, 1, 0, 0, 0, 1}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 7; ++c) a(r, c) = rows[r][c];
  std::vector<Rational> b{0, 0, 1};
  std::vector<Rational> c{Rational(-3, 4), 20, Rational(-1, 2), 6, 0, 0, 0};
  LpResult r = minimize(a, b, c);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rational(-5, 4));
  CHECK(feasible_point(a, b, r.x));
}

TEST_CASE("random feasibility problems: verdicts are certified") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t rows = 2 + static_cast<std::size_t>(trial % 3);
    std::size_t cols = 2 + static_cast<std::size_t>(trial % 5);
    RationalMatrix a(rows, cols);
    std::vector<Rational> b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = d(rng);
      b[r] = d(rng);
    }
    LpResult res = find_feasible(a, b);
    if (res.status == LpStatus::Optimal) {
      ++feasible;
      CHECK(feasible_point(a, b, res.x));
    } else {
      ++infeasible;
      CHECK(farkas(a, b, res.y));
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}
