#include "tricone/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "tricone/error.hpp"

namespace tricone {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_incidence(const IncidenceMatrix& w) {
  RationalMatrix m(w.rows(), w.cols());
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) m(r, c) = w(r, c);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * x[j];
  return out;
}

namespace {

// Bareiss on an integer matrix; returns the rank. `a` is destroyed.
std::size_t bareiss_rank(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    const mpz_class pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = pivot * a[i * cols + j] - lead * a[r * cols + j];
        mpz_divexact(a[i * cols + j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

mpz_class lcm_of_denominators(const Rational* begin, std::size_t count) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < count; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), begin[i].get_den_mpz_t());
  return l;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) {
  std::vector<mpz_class> ints(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = lcm_of_denominators(&a(r, 0), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Rational scaled = a(r, c) * l;
      ints[r * a.cols() + c] = scaled.get_num();
    }
  }
  return bareiss_rank(ints, a.rows(), a.cols());
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

RationalMatrix invert(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "invert: matrix not square");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::Singular, "invert: matrix is singular");
  }
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& a) {
  RationalMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(a.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t integer_rank(std::span<const std::int64_t> entries, std::size_t rows, std::size_t cols) {
  if (entries.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "integer_rank shape");
  using i128 = __int128;
  constexpr i128 kSafe = static_cast<i128>(1) << 62;
  std::vector<i128> a(entries.begin(), entries.end());
  auto within = [&](i128 x) { return x < kSafe && x > -kSafe; };
  for (auto x : a)
    if (!within(x)) goto fallback;
  {
    std::size_t r = 0;
    i128 prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && a[p * cols + c] == 0) ++p;
      if (p == rows) continue;
      if (p != r)
        for (std::size_t j = c; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      const i128 pivot = a[r * cols + c];
      for (std::size_t i = r + 1; i < rows; ++i) {
        const i128 lead = a[i * cols + c];
        i128* row = &a[i * cols];
        const i128* prow = &a[r * cols];
        if (lead == 0) {
          if (pivot == prev) continue;
          for (std::size_t j = c + 1; j < cols; ++j) {
            row[j] = pivot * row[j] / prev;
            if (!within(row[j])) goto fallback;
          }
          continue;
        }
        for (std::size_t j = c + 1; j < cols; ++j) {
          row[j] = (pivot * row[j] - lead * prow[j]) / prev;
          if (!within(row[j])) goto fallback;
        }
        row[c] = 0;
      }
      prev = pivot;
      ++r;
    }
    return r;
  }
fallback:
  std::vector<mpz_class> big(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) big[i] = static_cast<long>(entries[i]);
  return bareiss_rank(big, rows, cols);
}

std::size_t triangle_rank(std::span<const Triangle> triangles, int n) {
  const std::size_t cols = pair_count(n);
  std::vector<std::int64_t> m(triangles.size() * cols, 0);
  for (std::size_t r = 0; r < triangles.size(); ++r)
    for (const Edge& e : triangles[r].edges()) m[r * cols + edge_index(e, n)] = 1;
  return integer_rank(m, triangles.size(), cols);
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string Polynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coefficients[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (mag != 1 || d == 0) os << mag.get_str();
    if (d > 0) os << (mag != 1 ? "*t" : "t");
    if (d > 1) os << "^" << d;
    first = false;
  }
  return os.str();
}

Polynomial char_poly(const WeightedGraph& y) {
  const std::size_t n = static_cast<std::size_t>(y.n());
  RationalMatrix a(n, n);
  for (Vertex v = 2; v <= y.n(); ++v)
    for (Vertex u = 1; u < v; ++u) {
      const Rational& w = y.weight(Edge{u, v});
      a(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) = w;
      a(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1)) = w;
    }
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    RationalMatrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial{std::move(c)};
}

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Coeffs derivative(const Coeffs& p) {
  Coeffs d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b) {
  trim(a);
  if (a.size() < b.size()) return {Coeffs{}, a};
  Coeffs q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Coeffs monic(Coeffs p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Coeffs gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> out;
  if (v == 0 || v > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

// Splits off rational roots of a square-free polynomial; returns how many.
int peel_rational_roots(Coeffs& p) {
  int roots = 0;
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    ++roots;
  }
  if (p.size() <= 1) return roots;
  mpz_class l = lcm_of_denominators(p.data(), p.size());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(Rational(c * l).get_num());
  auto nums = divisors(ints.front());
  auto dens = divisors(ints.back());
  for (const auto& a : nums)
    for (const auto& b : dens)
      for (int sign : {1, -1}) {
        if (p.size() <= 1) return roots;
        Rational r(a * sign, b);
        r.canonicalize();
        if (Polynomial{p}.evaluate(r) == 0) {
          p = divmod(p, Coeffs{-r, 1}).first;
          ++roots;
        }
      }
  return roots;
}

}  // namespace

std::vector<std::pair<int, int>> factor_degree_pattern(const Polynomial& poly) {
  Coeffs f = monic(poly.coefficients);
  std::vector<std::pair<int, int>> pattern;
  if (f.size() <= 1) return pattern;
  // Yun's square-free decomposition.
  Coeffs a = gcd(f, derivative(f));
  Coeffs b = divmod(f, a).first;
  Coeffs c = divmod(derivative(f), a).first;
  Coeffs d = c;
  {
    Coeffs db = derivative(b);
    d.resize(std::max(c.size(), db.size()));
    for (std::size_t i = 0; i < db.size(); ++i) d[i] -= db[i];
    trim(d);
  }
  int multiplicity = 1;
  while (b.size() > 1) {
    Coeffs g = gcd(b, d);
    Coeffs part = g;
    if (part.size() > 1) {
      int linear = peel_rational_roots(part);
      for (int i = 0; i < linear; ++i) pattern.emplace_back(1, multiplicity);
      if (part.size() > 1) pattern.emplace_back(static_cast<int>(part.size()) - 1, multiplicity);
    }
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    Coeffs db = derivative(b);
    d = c;
    d.resize(std::max(c.size(), db.size()));
    for (std::size_t i = 0; i < db.size(); ++i) d[i] -= db[i];
    trim(d);
    ++multiplicity;
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

WeightedGraph standard_form(const WeightedGraph& y) {
  if (y.is_zero()) throw Error(ErrorKind::ZeroVector, "standard form of the zero vector");
  mpz_class l = lcm_of_denominators(y.weights().data(), y.size());
  mpz_class g = 0;
  std::vector<Rational> scaled(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    scaled[i] = y[i] * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled[i].get_num_mpz_t());
  }
  for (auto& q : scaled) q /= g;
  return WeightedGraph(y.n(), std::move(scaled));
}

bool is_standard_form(const WeightedGraph& y) {
  if (y.is_zero() || !y.is_integral()) return false;
  mpz_class g = 0;
  for (const auto& q : y.weights()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  return g == 1;
}

void make_primitive(std::span<std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

}  // namespace tricone
