#pragma once

// Exact rational linear algebra over GMP rationals, plus a fraction-free
// integer rank used on the hot paths of facet verification and enumeration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricone/graph.hpp"

namespace tricone {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_incidence(const IncidenceMatrix& w);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  std::vector<Rational> operator*(std::span<const Rational> x) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over the rationals (Bareiss elimination on row-scaled integers).
std::size_t rank(const RationalMatrix& a);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b);

/// Throws Error(Singular) or Error(DimensionMismatch) for non-square input.
RationalMatrix invert(const RationalMatrix& a);

/// Basis of {x : A x = 0}, one vector per free column.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& a);

/// Rank of an integer matrix given row-major. Uses 128-bit Bareiss and falls
/// back to GMP when an intermediate minor leaves the safe range.
std::size_t integer_rank(std::span<const std::int64_t> entries, std::size_t rows, std::size_t cols);

/// Rank of a set of triangle incidence vectors in R^{C(n,2)}.
std::size_t triangle_rank(std::span<const Triangle> triangles, int n);

struct Polynomial {
  /// Ascending degree; empty means the zero polynomial.
  std::vector<Rational> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rational evaluate(const Rational& t) const;
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Characteristic polynomial det(tI - M) of the symmetric zero-diagonal
/// matrix M[i][j] = y({i,j}), via Faddeev-LeVerrier.
Polynomial char_poly(const WeightedGraph& y);

/// Coarse factorization shape of a polynomial: square-free parts (Yun) with
/// their multiplicity, each split into rational linear factors and a residual
/// block. Entries are (degree, multiplicity); the residual block need not be
/// irreducible.
std::vector<std::pair<int, int>> factor_degree_pattern(const Polynomial& p);

/// Positive rescaling to coprime integers. Throws Error(ZeroVector) on zero.
WeightedGraph standard_form(const WeightedGraph& y);
bool is_standard_form(const WeightedGraph& y);

/// Primitive integer version of an integer vector (divide by the gcd of |entries|).
void make_primitive(std::span<std::int64_t> v);

}  // namespace tricone
