#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tricone/error.hpp"
#include "tricone/exact.hpp"
#include "tricone/families.hpp"

using namespace tricone;

namespace {

std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                     int lo, int hi, std::size_t rank_cap) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  // Force low rank by overwriting rows with combinations of earlier ones.
  for (std::size_t r = rank_cap; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = m[r % rank_cap][c] * 2 - m[(r + 1) % rank_cap][c];
  return m;
}

RationalMatrix to_rational(const std::vector<std::vector<std::int64_t>>& m) {
  RationalMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) out(r, c) = static_cast<long>(m[r][c]);
  return out;
}

}  // namespace

TEST_CASE("rank agrees with prime-field oracle on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 2 + static_cast<std::size_t>(trial % 9);
    std::size_t cols = 2 + static_cast<std::size_t>((trial * 5) % 11);
    std::size_t cap = 1 + static_cast<std::size_t>(trial % 6);
    auto m = random_matrix(rng, rows, cols, -5, 5, std::min(cap, rows));
    std::size_t expected = oracle::rank(m);
    CHECK(rank(to_rational(m)) == expected);
    std::vector<std::int64_t> flat;
    for (auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
    CHECK(integer_rank(flat, rows, cols) == expected);
  }
}

TEST_CASE("integer_rank falls back to big integers for huge entries") {
  const std::int64_t big = std::int64_t{1} << 61;
  std::vector<std::int64_t> m{big, big - 1, 3, big - 7, big, 5, big - 3, big - 11, 7};
  std::vector<std::vector<std::int64_t>> rows{{m[0], m[1], m[2]}, {m[3], m[4], m[5]}, {m[6], m[7], m[8]}};
  CHECK(integer_rank(m, 3, 3) == rank(to_rational(rows)));
  std::vector<std::int64_t> dependent{big, big - 1, big - 1, big - 2};
  CHECK(integer_rank(dependent, 2, 2) == 2);
  std::vector<std::int64_t> singular{big, 2, big, 2};
  CHECK(integer_rank(singular, 2, 2) == 1);
}

TEST_CASE("triangle rank: all triangles span every edge space for n >= 5") {
  CHECK(triangle_rank(all_triangles(4), 4) == 4);
  for (int n = 5; n <= 8; ++n) {
    auto tri = all_triangles(n);
    CHECK(triangle_rank(tri, n) == pair_count(n));
  }
  auto three = all_triangles(3);
  CHECK(triangle_rank(three, 3) == 1);
}

TEST_CASE("inverse, solve and null space") {
  RationalMatrix a(3, 3);
  std::int64_t vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) a(r, c) = static_cast<long>(vals[r][c]);
  CHECK(a * invert(a) == RationalMatrix::identity(3));
  std::vector<Rational> b{1, 2, 3};
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * std::span<const Rational>(*x) == b);

  RationalMatrix s(2, 3);
  s(0, 0) = 1; s(0, 1) = 2; s(0, 2) = 3;
  s(1, 0) = 2; s(1, 1) = 4; s(1, 2) = 6;
  CHECK_THROWS_AS(invert(s), Error);
  RationalMatrix sq(2, 2);
  sq(0, 0) = 1; sq(0, 1) = 2; sq(1, 0) = 2; sq(1, 1) = 4;
  try {
    invert(sq);
    FAIL("expected singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
  std::vector<Rational> inconsistent{1, 3};
  CHECK_FALSE(solve(s, inconsistent));
  auto kernel = null_space(s);
  CHECK(kernel.size() == 2);
  for (const auto& v : kernel) {
    auto out = s * std::span<const Rational>(v);
    CHECK(out == std::vector<Rational>{0, 0});
  }
}

TEST_CASE("the explicit inverse of the n = 5 incidence matrix") {
  RationalMatrix w = RationalMatrix::from_incidence(IncidenceMatrix(5));
  RationalMatrix u = w5_inverse();
  CHECK(u * w == RationalMatrix::identity(10));
  CHECK(w * u == RationalMatrix::identity(10));
  CHECK(invert(w) == u);
}

TEST_CASE("characteristic polynomial and factor pattern") {
  // Triangle K3: t^3 - 3t - 2 = (t - 2)(t + 1)^2.
  WeightedGraph k3 = complete_graph(3);
  Polynomial p = char_poly(k3);
  CHECK(p.coefficients == std::vector<Rational>{-2, -3, 0, 1});
  CHECK(p.evaluate(2) == 0);
  CHECK(p.evaluate(-1) == 0);
  CHECK(factor_degree_pattern(p) == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});
  // Single edge on 3 vertices: t^3 - t = t (t - 1)(t + 1).
  Polynomial q = char_poly(edge_vector(Edge{1, 2}, 3));
  CHECK(q.coefficients == std::vector<Rational>{0, -1, 0, 1});
  CHECK(factor_degree_pattern(q) == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 1}});
  // Path 1-2-3: t^3 - 2t has an irrational pair.
  std::vector<std::int64_t> path{1, 0, 1};
  Polynomial r = char_poly(WeightedGraph::from_integers(3, path));
  CHECK(factor_degree_pattern(r) == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
  CHECK(p.to_string() == "t^3 - 3*t - 2");
}

TEST_CASE("standard form and primitive vectors") {
  std::vector<Rational> w{Rational(2, 3), Rational(-4, 3), 0};
  WeightedGraph y(3, w);
  WeightedGraph s = standard_form(y);
  CHECK(s.to_integers() == std::vector<std::int64_t>{1, -2, 0});
  CHECK(is_standard_form(s));
  CHECK_FALSE(is_standard_form(y));
  CHECK(standard_form(s.scaled(7)) == s);
  CHECK_THROWS_AS(standard_form(WeightedGraph(3)), Error);
  std::vector<std::int64_t> v{6, -9, 0, 12};
  make_primitive(v);
  CHECK(v == std::vector<std::int64_t>{2, -3, 0, 4});
}
