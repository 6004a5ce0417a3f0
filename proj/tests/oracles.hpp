#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library beyond plain data types, and favour obviousness over
// speed: brute force over permutations, prime-field ranks, floating-point
// kernels followed by exact integer re-verification.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

/// Colex list of pairs {u<v} on [n], built by sorting rather than by formula.
inline std::vector<std::pair<int, int>> edges(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return out;
}

inline std::map<std::pair<int, int>, int> edge_lookup(int n) {
  std::map<std::pair<int, int>, int> m;
  auto es = edges(n);
  for (int i = 0; i < static_cast<int>(es.size()); ++i) m[es[static_cast<std::size_t>(i)]] = i;
  return m;
}

/// Each triangle as its three colex edge indices, triangles in colex order.
inline std::vector<std::array<int, 3>> triangles(int n) {
  auto idx = edge_lookup(n);
  std::vector<std::array<int, 3>> tri;
  std::vector<std::array<int, 3>> verts;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) verts.push_back({a, b, c});
  std::sort(verts.begin(), verts.end(), [](auto x, auto y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  for (auto [a, b, c] : verts) tri.push_back({idx[{a, b}], idx[{a, c}], idx[{b, c}]});
  return tri;
}

inline bool supporting(const Vec& y, int n) {
  for (auto t : triangles(n))
    if (y[static_cast<std::size_t>(t[0])] + y[static_cast<std::size_t>(t[1])] +
            y[static_cast<std::size_t>(t[2])] <
        0)
      return false;
  return true;
}

/// Rank over Z/p.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto power = [p](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
      b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    std::int64_t inv = power(m[rank][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      std::int64_t f = static_cast<std::int64_t>(static_cast<__int128>(m[r][c]) * inv % p);
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = static_cast<std::int64_t>(
            ((m[r][k] - static_cast<__int128>(f) * m[rank][k]) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

/// Rank over Q, taken as the larger of two prime-field ranks (each is a lower
/// bound; equality fails only if both primes divide every maximal minor).
inline std::size_t rank(const std::vector<std::vector<std::int64_t>>& m) {
  return std::max(rank_mod(m, 1000000007), rank_mod(m, 998244353));
}

/// Zero-sum triangles of y, as 0/1 rows over the edges.
inline std::vector<std::vector<std::int64_t>> zero_rows(const Vec& y, int n) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto t : triangles(n)) {
    if (y[static_cast<std::size_t>(t[0])] + y[static_cast<std::size_t>(t[1])] +
            y[static_cast<std::size_t>(t[2])] !=
        0)
      continue;
    std::vector<std::int64_t> row(y.size(), 0);
    for (int e : t) row[static_cast<std::size_t>(e)] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline bool is_facet(const Vec& y, int n) {
  if (!supporting(y, n)) return false;
  auto rows = zero_rows(y, n);
  return !rows.empty() && rank(rows) + 1 == y.size();
}

/// Divide by the gcd of the entries (positive scaling only).
inline Vec primitive(Vec v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// All facets of the triangle cone on [n] by brute force: every set of d-1
/// triangles with full rank defines a candidate line; keep the candidates
/// (either sign) that are supporting and pass the exact facet test.
inline std::set<Vec> facets_by_subsets(int n) {
  auto tri = triangles(n);
  const std::size_t d = edges(n).size();
  const std::size_t m = tri.size();
  const std::size_t k = d - 1;
  std::set<Vec> out;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    // Floating-point kernel of the k x d system; exactness is restored below.
    std::vector<std::vector<double>> a(k, std::vector<double>(d, 0.0));
    for (std::size_t r = 0; r < k; ++r)
      for (int e : tri[pick[r]]) a[r][static_cast<std::size_t>(e)] = 1.0;
    std::vector<std::size_t> pivcol;
    std::size_t row = 0;
    for (std::size_t c = 0; c < d && row < k; ++c) {
      std::size_t best = row;
      for (std::size_t r = row; r < k; ++r)
        if (std::fabs(a[r][c]) > std::fabs(a[best][c])) best = r;
      if (std::fabs(a[best][c]) < 1e-9) continue;
      std::swap(a[best], a[row]);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == row) continue;
        double f = a[r][c] / a[row][c];
        for (std::size_t cc = 0; cc < d; ++cc) a[r][cc] -= f * a[row][cc];
      }
      pivcol.push_back(c);
      ++row;
    }
    if (row == k) {
      std::size_t free_col = 0;
      while (std::find(pivcol.begin(), pivcol.end(), free_col) != pivcol.end()) ++free_col;
      std::vector<double> x(d, 0.0);
      x[free_col] = 1.0;
      for (std::size_t r = 0; r < k; ++r) x[pivcol[r]] = -a[r][free_col] / a[r][pivcol[r]];
      double small = 0;
      for (double v : x)
        if (std::fabs(v) > 1e-9 && (small == 0 || std::fabs(v) < small)) small = std::fabs(v);
      for (std::int64_t scale = 1; scale <= 60; ++scale) {
        Vec y(d);
        bool integral = true;
        for (std::size_t i = 0; i < d; ++i) {
          double v = x[i] / small * static_cast<double>(scale);
          y[i] = std::llround(v);
          if (std::fabs(v - static_cast<double>(y[i])) > 1e-6) integral = false;
        }
        if (!integral) continue;
        for (int sign : {1, -1}) {
          Vec z = y;
          for (auto& v : z) v *= sign;
          z = primitive(z);
          if (is_facet(z, n)) out.insert(z);
        }
        break;
      }
    }
    // Next k-subset of [m].
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// y relabelled by the vertex permutation `perm` (0-based images):
/// result({perm(u), perm(v)}) = y({u, v}).
inline Vec relabel(const Vec& y, int n, const std::vector<int>& perm) {
  auto es = edges(n);
  auto idx = edge_lookup(n);
  Vec out(y.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    int a = perm[static_cast<std::size_t>(es[i].first - 1)] + 1;
    int b = perm[static_cast<std::size_t>(es[i].second - 1)] + 1;
    out[static_cast<std::size_t>(idx[{std::min(a, b), std::max(a, b)}])] = y[i];
  }
  return out;
}

struct BruteCanonical {
  Vec form;
  std::uint64_t stabilizer = 0;
};

/// Lexicographically largest relabelling over all n! permutations.
inline BruteCanonical brute_canonical(const Vec& y, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BruteCanonical best;
  do {
    Vec z = relabel(y, n, perm);
    if (z == y) ++best.stabilizer;
    if (best.form.empty() || z > best.form) best.form = z;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Bitmask of zero-sum triangles (n <= 8, so at most 56 triangles).
inline std::uint64_t zero_mask(const Vec& y, int n) {
  std::uint64_t mask = 0;
  auto tri = triangles(n);
  for (std::size_t k = 0; k < tri.size(); ++k) {
    auto t = tri[k];
    if (y[static_cast<std::size_t>(t[0])] + y[static_cast<std::size_t>(t[1])] +
            y[static_cast<std::size_t>(t[2])] ==
        0)
      mask |= std::uint64_t{1} << k;
  }
  return mask;
}

/// Combinatorial adjacency degree of facet `i`: facet j is a neighbour iff no
/// third facet's zero set contains the common zero set. Valid for the complete
/// facet list of a pointed cone; does not use any rank computation.
inline std::size_t combinatorial_degree(std::size_t i, const std::vector<std::uint64_t>& masks,
                                        std::size_t dim) {
  std::vector<std::size_t> cand;
  for (std::size_t j = 0; j < masks.size(); ++j)
    if (j != i && static_cast<std::size_t>(__builtin_popcountll(masks[i] & masks[j])) + 2 >= dim)
      cand.push_back(j);
  std::size_t degree = 0;
  for (std::size_t j : cand) {
    std::uint64_t common = masks[i] & masks[j];
    bool blocked = false;
    for (std::size_t k : cand)
      if (k != j && (masks[k] & common) == common) {
        blocked = true;
        break;
      }
    if (!blocked) ++degree;
  }
  return degree;
}

}  // namespace oracle
