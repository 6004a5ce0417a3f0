#include "tricone/graph.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "tricone/error.hpp"

namespace tricone {

namespace {

std::size_t choose2(std::size_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
std::size_t choose3(std::size_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

void check_vertex(Vertex x, int n) {
  if (x < 1 || x > n) {
    throw Error(ErrorKind::InvalidInput,
                "vertex " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty rational");
  std::size_t slash = text.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + text + "'");
  }
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorKind::InvalidInput, "edge endpoints must differ");
  return a < b ? Edge{a, b} : Edge{b, a};
}

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  if (a == b || b == c || a == c) {
    throw Error(ErrorKind::InvalidInput, "triangle vertices must be distinct");
  }
  std::array<Vertex, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return Triangle{v};
}

std::size_t edge_index(Edge e, int n) {
  check_vertex(e.u, n);
  check_vertex(e.v, n);
  if (e.u >= e.v) throw Error(ErrorKind::InvalidInput, "edge requires u < v");
  return choose2(static_cast<std::size_t>(e.v - 1)) + static_cast<std::size_t>(e.u - 1);
}

Edge index_to_edge(std::size_t index, int n) {
  if (index >= pair_count(n)) {
    throw Error(ErrorKind::InvalidInput, "edge index " + std::to_string(index) + " out of range");
  }
  std::size_t v = 2;
  while (choose2(v) <= index) ++v;  // largest v with C(v-1,2) <= index
  std::size_t u = index - choose2(v - 1) + 1;
  return Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

std::size_t triangle_index(const Triangle& t, int n) {
  const auto& [a, b, c] = t.vertices;
  check_vertex(a, n);
  check_vertex(b, n);
  check_vertex(c, n);
  if (!(a < b && b < c)) throw Error(ErrorKind::InvalidInput, "triangle must be sorted");
  return choose3(static_cast<std::size_t>(c - 1)) + choose2(static_cast<std::size_t>(b - 1)) +
         static_cast<std::size_t>(a - 1);
}

Triangle index_to_triangle(std::size_t index, int n) {
  if (index >= triple_count(n)) {
    throw Error(ErrorKind::InvalidInput, "triangle index out of range");
  }
  std::size_t c = 3;
  while (choose3(c) <= index) ++c;
  index -= choose3(c - 1);
  std::size_t b = 2;
  while (choose2(b) <= index) ++b;
  index -= choose2(b - 1);
  return Triangle{{static_cast<Vertex>(index + 1), static_cast<Vertex>(b), static_cast<Vertex>(c)}};
}

std::vector<Triangle> all_triangles(int n) {
  std::vector<Triangle> out;
  out.reserve(triple_count(n));
  for (Vertex c = 3; c <= n; ++c)
    for (Vertex b = 2; b < c; ++b)
      for (Vertex a = 1; a < b; ++a) out.push_back(Triangle{{a, b, c}});
  return out;
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  out.reserve(pair_count(n));
  for (Vertex v = 2; v <= n; ++v)
    for (Vertex u = 1; u < v; ++u) out.push_back(Edge{u, v});
  return out;
}

WeightedGraph::WeightedGraph(int n) : n_(n), weights_(pair_count(n)) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "weighted graph needs n >= 2");
}

WeightedGraph::WeightedGraph(int n, std::vector<Rational> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "weighted graph needs n >= 2");
  if (weights_.size() != pair_count(n)) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(pair_count(n)) + " weights, got " +
                    std::to_string(weights_.size()));
  }
  for (auto& w : weights_) w.canonicalize();
}

WeightedGraph WeightedGraph::from_integers(int n, std::span<const std::int64_t> weights) {
  std::vector<Rational> w;
  w.reserve(weights.size());
  for (auto x : weights) w.emplace_back(static_cast<long>(x));
  return WeightedGraph(n, std::move(w));
}

void WeightedGraph::set(std::size_t i, Rational value) {
  if (i >= weights_.size()) throw Error(ErrorKind::InvalidInput, "coordinate out of range");
  value.canonicalize();
  weights_[i] = std::move(value);
}

bool WeightedGraph::is_zero() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& q) { return q == 0; });
}

bool WeightedGraph::is_integral() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

std::vector<std::int64_t> WeightedGraph::to_integers() const {
  std::vector<std::int64_t> out;
  out.reserve(weights_.size());
  for (const auto& q : weights_) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
      throw Error(ErrorKind::InvalidInput, "weight " + q.get_str() + " is not a small integer");
    }
    out.push_back(q.get_num().get_si());
  }
  return out;
}

WeightedGraph WeightedGraph::scaled(const Rational& q) const {
  WeightedGraph out = *this;
  for (auto& w : out.weights_) w *= q;
  return out;
}

WeightedGraph WeightedGraph::operator+(const WeightedGraph& other) const {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "vertex counts differ");
  WeightedGraph out = *this;
  for (std::size_t i = 0; i < weights_.size(); ++i) out.weights_[i] += other.weights_[i];
  return out;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  return a.n_ == b.n_ && a.weights_ == b.weights_;
}

std::strong_ordering operator<=>(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = 0; i < a.weights_.size(); ++i) {
    int c = cmp(a.weights_[i], b.weights_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

WeightedGraph incidence_vector(const Triangle& t, int n) {
  WeightedGraph g(n);
  (void)triangle_index(t, n);
  for (const Edge& e : t.edges()) g.set(e, 1);
  return g;
}

WeightedGraph edge_vector(Edge e, int n) {
  WeightedGraph g(n);
  g.set(e, 1);
  return g;
}

WeightedGraph complete_graph(int n) {
  return WeightedGraph(n, std::vector<Rational>(pair_count(n), Rational(1)));
}

WeightedGraph graph_from_edges(int n, std::span<const std::pair<Edge, Rational>> edges) {
  WeightedGraph g(n);
  std::set<std::size_t> seen;
  for (const auto& [e, w] : edges) {
    std::size_t i = edge_index(e, n);
    if (!seen.insert(i).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate edge {" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + "}");
    }
    g.set(i, w);
  }
  return g;
}

Rational inner_product(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::DimensionMismatch, "vertex counts differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational triangle_sum(const WeightedGraph& y, const Triangle& t) {
  Rational s = 0;
  for (const Edge& e : t.edges()) s += y.weight(e);
  return s;
}

IncidenceMatrix::IncidenceMatrix(int n)
    : n_(n), rows_(pair_count(n)), cols_(triple_count(n)), entries_(rows_ * cols_, 0) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "incidence matrix needs n >= 3");
  supports_.reserve(cols_);
  std::size_t k = 0;
  for (const Triangle& t : all_triangles(n)) {
    std::array<std::size_t, 3> support{};
    auto edges = t.edges();
    for (int i = 0; i < 3; ++i) {
      support[static_cast<std::size_t>(i)] = edge_index(edges[static_cast<std::size_t>(i)], n);
      entries_[support[static_cast<std::size_t>(i)] * cols_ + k] = 1;
    }
    std::sort(support.begin(), support.end());
    supports_.push_back(support);
    ++k;
  }
}

IncidenceMatrix build_incidence_matrix(int n) { return IncidenceMatrix(n); }

}  // namespace tricone
