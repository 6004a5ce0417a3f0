#include "tricone/families.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "tricone/error.hpp"

namespace tricone {

namespace {

void check_labels(const std::vector<Vertex>& vs, int lo, int hi, const char* what) {
  std::set<Vertex> seen;
  for (Vertex v : vs) {
    if (v < lo || v > hi) {
      throw Error(ErrorKind::InvalidInput, std::string(what) + ": vertex " + std::to_string(v) + " out of range");
    }
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidInput, std::string(what) + ": repeated vertex");
  }
}

}  // namespace

std::vector<Vertex> CutPartition::side_b() const {
  std::vector<Vertex> b;
  for (Vertex v = 1; v <= n; ++v)
    if (std::find(side_a.begin(), side_a.end(), v) == side_a.end()) b.push_back(v);
  return b;
}

FacetNormal trivial_facet(int n, Edge e) {
  if (n < 6) throw Error(ErrorKind::InvalidInput, "a single edge is a facet normal only for n >= 6");
  return make_facet_normal(edge_vector(e, n));
}

FacetNormal star_facet(int n, Vertex center, Vertex neg) {
  if (n < 6) throw Error(ErrorKind::InvalidInput, "star facet needs n >= 6");
  if (center == neg) throw Error(ErrorKind::InvalidInput, "star center and negative leaf coincide");
  WeightedGraph y(n);
  for (Vertex v = 1; v <= n; ++v) {
    if (v == center) continue;
    y.set(make_edge(v, center), v == neg ? -1 : 1);
  }
  return make_facet_normal(y);
}

FacetNormal cut_facet(const CutPartition& p) {
  if (p.n < 5) throw Error(ErrorKind::InvalidInput, "cut facet needs n >= 5");
  check_labels(p.side_a, 1, p.n, "cut");
  auto b = p.side_b();
  if (p.side_a.size() < 2 || b.size() < 2) {
    throw Error(ErrorKind::InvalidInput, "cut sides must both have at least 2 vertices");
  }
  std::vector<bool> in_a(static_cast<std::size_t>(p.n) + 1, false);
  for (Vertex v : p.side_a) in_a[static_cast<std::size_t>(v)] = true;
  WeightedGraph y(p.n);
  for (const Edge& e : all_edges(p.n))
    y.set(e, in_a[static_cast<std::size_t>(e.u)] == in_a[static_cast<std::size_t>(e.v)] ? 2 : -1);
  return make_facet_normal(y);
}

namespace {

void check_binary_star(int n, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (n < 8) throw Error(ErrorKind::InvalidInput, "binary star needs n >= 8");
  if (a.size() < 3 || b.size() < 3) throw Error(ErrorKind::InvalidInput, "binary star sides need >= 3 leaves");
  std::vector<Vertex> all = a;
  all.insert(all.end(), b.begin(), b.end());
  check_labels(all, 3, n, "binary star");
  if (all.size() != static_cast<std::size_t>(n - 2)) {
    throw Error(ErrorKind::InvalidInput, "binary star sides must partition {3..n}");
  }
}

}  // namespace

FacetNormal binary_star_facet(int n, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  check_binary_star(n, a, b);
  WeightedGraph y(n);
  y.set(Edge{1, 2}, -1);
  for (Vertex v : a) y.set(make_edge(1, v), 1);
  for (Vertex v : b) y.set(make_edge(2, v), 1);
  return make_facet_normal(y);
}

WeightedGraph binary_star_witness_graph(int n, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  check_binary_star(n, a, b);
  WeightedGraph g(n);
  for (Vertex v = 4; v <= n; ++v)
    for (Vertex u = 3; u < v; ++u) g.set(Edge{u, v}, 1);
  for (Vertex v : a) g.set(make_edge(2, v), 1);
  for (Vertex v : b) g.set(make_edge(1, v), 1);
  g.set(Edge{1, 2}, 1);
  return g;
}

WeightedGraph split_vector(const WeightedGraph& y) {
  const int n = y.n();
  WeightedGraph out(n + 1);
  for (const Edge& e : all_edges(n)) out.set(e, y.weight(e));
  Rational low = y.weight(Edge{1, n});
  for (Vertex i = 1; i < n; ++i) {
    const Rational& w = y.weight(Edge{i, n});
    out.set(Edge{i, n + 1}, w);
    if (w < low) low = w;
  }
  out.set(Edge{n, n + 1}, -2 * low);
  return out;
}

FacetNormal vertex_split(const FacetNormal& y) {
  const int n = y.n();
  if (n < 5) throw Error(ErrorKind::InvalidInput, "vertex split needs n >= 5");
  bool positive_inside = false;
  for (const Triangle& t : all_triangles(n - 1))
    if (triangle_sum(y.vector, t) > 0) {
      positive_inside = true;
      break;
    }
  if (!positive_inside) {
    throw Error(ErrorKind::HypothesisFailure,
                "vertex split: no triangle inside [" + std::to_string(n - 1) + "] has positive weight");
  }
  return make_facet_normal(split_vector(y.vector));
}

std::vector<Vertex> lex_product_block(int m, int b) {
  const int s = 6 * m + 3;
  std::vector<Vertex> out;
  for (int i = 0; i < s; ++i) out.push_back(b * s + i + 1);
  return out;
}

WeightedGraph lex_product_c4(int m) {
  if (m < 0) throw Error(ErrorKind::InvalidInput, "lex_product_c4 needs m >= 0");
  const int s = 6 * m + 3;
  const int n = 4 * s;
  WeightedGraph g(n);
  auto block = [s](Vertex v) { return (v - 1) / s; };
  for (const Edge& e : all_edges(n)) {
    int bu = block(e.u);
    int bv = block(e.v);
    int gap = (bv - bu + 4) % 4;
    if (gap == 0 || gap == 1 || gap == 3) g.set(e, 1);
  }
  return g;
}

int mod3_category(const WeightedGraph& y) {
  if (!is_standard_form(y)) throw Error(ErrorKind::InvalidInput, "mod-3 category needs standard form");
  bool has[3] = {false, false, false};
  for (const auto& q : y.weights()) {
    mpz_class r = q.get_num() % 3;
    if (r < 0) r += 3;
    has[r.get_ui()] = true;
  }
  if (has[0]) return 0;
  if (has[1] && has[2]) {
    throw Error(ErrorKind::Integrity, "entries are mixed 1 and 2 mod 3 with none 0 mod 3");
  }
  return has[1] ? 1 : 2;
}

std::optional<SignExtremes> sign_extremes_check(const WeightedGraph& y) {
  std::optional<Rational> a;
  std::optional<Rational> b;
  for (const auto& q : y.weights()) {
    if (q > 0 && (!a || q > *a)) a = q;
    if (q < 0 && (!b || q < *b)) b = q;
  }
  if (!b) return std::nullopt;
  SignExtremes out;
  out.max_positive = a.value_or(Rational(0));
  out.min_negative = *b;
  out.bounds_hold = -out.min_negative / 2 <= out.max_positive && out.max_positive <= -2 * out.min_negative;
  return out;
}

SupportReport nonpositive_support_check(const WeightedGraph& y) {
  const int n = y.n();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
  std::size_t edges = 0;
  for (const Edge& e : all_edges(n))
    if (y.weight(e) <= 0) {
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
      ++edges;
    }
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  SupportReport report;
  report.bipartite = true;
  int components = 0;
  for (Vertex s = 1; s <= n && report.bipartite; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    ++components;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty() && report.bipartite) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : adj[static_cast<std::size_t>(u)]) {
        auto& cv = color[static_cast<std::size_t>(v)];
        if (cv == -1) {
          cv = 1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (cv == color[static_cast<std::size_t>(u)]) {
          report.bipartite = false;
        }
      }
    }
  }
  if (report.bipartite && components == 1) {
    std::size_t a = static_cast<std::size_t>(std::count(color.begin() + 1, color.end(), 0));
    std::size_t b = static_cast<std::size_t>(n) - a;
    report.complete_bipartite = edges == a * b;
  }
  return report;
}

bool zero_sum_edge_cover_check(const WeightedGraph& y) {
  const int n = y.n();
  std::vector<bool> covered(pair_count(n), false);
  for (const Triangle& t : all_triangles(n)) {
    if (triangle_sum(y, t) != 0) continue;
    for (const Edge& e : t.edges()) covered[edge_index(e, n)] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

RationalMatrix w5_inverse() {
  constexpr int n = 5;
  auto triangles = all_triangles(n);
  auto edges = all_edges(n);
  RationalMatrix u(triangles.size(), edges.size());
  for (std::size_t k = 0; k < triangles.size(); ++k)
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int meet = static_cast<int>(triangles[k].contains(edges[e].u)) +
                 static_cast<int>(triangles[k].contains(edges[e].v));
      u(k, e) = (meet == 0 || meet == 2) ? Rational(1, 3) : Rational(-1, 6);
    }
  return u;
}

}  // namespace tricone
