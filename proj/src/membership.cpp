#include "tricone/membership.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "tricone/error.hpp"
#include "tricone/exact.hpp"
#include "tricone/facets.hpp"
#include "tricone/simplex.hpp"

namespace tricone {

namespace {

RationalMatrix incidence(int n) { return RationalMatrix::from_incidence(IncidenceMatrix(n)); }

}  // namespace

MembershipResult decide_membership(const WeightedGraph& g, const MembershipOptions& options) {
  const int n = g.n();
  if (n < 3) throw Error(ErrorKind::InvalidInput, "membership needs n >= 3");
  LpResult lp = find_feasible(incidence(n), g.weights());
  MembershipResult result;
  result.pivots = lp.pivots;
  if (lp.status == LpStatus::Optimal) {
    result.verdict = Verdict::Member;
    result.coefficients = std::move(lp.x);
    return result;
  }
  result.verdict = Verdict::NonMember;
  std::vector<Rational> s(lp.y.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = -lp.y[i];
  WeightedGraph separator = standard_form(WeightedGraph(n, std::move(s)));
  if (options.facetize && n >= 5) separator = facetize_separator(separator, g);
  result.separator = std::move(separator);
  return result;
}

bool verify_certificate(const WeightedGraph& g, const MembershipResult& result) {
  const int n = g.n();
  if (result.verdict == Verdict::Member) {
    if (!result.coefficients || result.separator) return false;
    const auto& x = *result.coefficients;
    if (x.size() != triple_count(n)) return false;
    std::vector<Rational> sum(pair_count(n));
    auto triangles = all_triangles(n);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] < 0) return false;
      if (x[k] == 0) continue;
      for (const Edge& e : triangles[k].edges()) sum[edge_index(e, n)] += x[k];
    }
    return sum == g.weights();
  }
  if (!result.separator || result.coefficients || result.separator->n() != n) return false;
  return is_supporting(*result.separator) && inner_product(*result.separator, g) < 0;
}

WeightedGraph facetize_separator(const WeightedGraph& separator, const WeightedGraph& g) {
  const int n = g.n();
  if (n < 5) throw Error(ErrorKind::InvalidInput, "facetize needs n >= 5");
  Rational total = 0;
  for (const auto& w : separator.weights()) total += w;
  if (total <= 0) throw Error(ErrorKind::InvalidInput, "separator is not a nonzero supporting vector");
  WeightedGraph y = separator.scaled(1 / total);
  const auto triangles = all_triangles(n);
  const std::size_t dim = pair_count(n);
  for (;;) {
    std::vector<std::size_t> tight;
    for (std::size_t k = 0; k < triangles.size(); ++k)
      if (triangle_sum(y, triangles[k]) == 0) tight.push_back(k);
    RationalMatrix m(tight.size() + 1, dim);
    for (std::size_t r = 0; r < tight.size(); ++r)
      for (const Edge& e : triangles[tight[r]].edges()) m(r, edge_index(e, n)) = 1;
    for (std::size_t c = 0; c < dim; ++c) m(tight.size(), c) = 1;
    auto kernel = null_space(m);
    if (kernel.empty()) break;
    WeightedGraph z(n, kernel.front());
    if (inner_product(z, g) > 0) z = z.scaled(-1);
    std::optional<Rational> step;
    for (const Triangle& t : triangles) {
      Rational dz = triangle_sum(z, t);
      if (dz >= 0) continue;
      Rational limit = triangle_sum(y, t) / -dz;
      if (!step || limit < *step) step = limit;
    }
    if (!step) throw Error(ErrorKind::Integrity, "facetize: cross-section is unbounded");
    y = y + z.scaled(*step);
  }
  return make_facet_normal(y).vector;
}

ArithmeticFlags arithmetic_flags(const WeightedGraph& g) {
  ArithmeticFlags flags;
  Rational edges = 0;
  flags.all_degrees_even = true;
  for (Vertex u = 1; u <= g.n(); ++u) {
    Rational degree = 0;
    for (Vertex v = 1; v <= g.n(); ++v)
      if (v != u) degree += g.weight(make_edge(u, v));
    if (degree.get_den() != 1 || degree.get_num() % 2 != 0) flags.all_degrees_even = false;
  }
  for (const auto& w : g.weights()) edges += w;
  flags.edge_count_divisible_by_3 = edges.get_den() == 1 && edges.get_num() % 3 == 0;
  return flags;
}

std::string MetricViolation::describe() const {
  std::ostringstream os;
  const auto& [a, b, c] = triangle.vertices;
  switch (kind) {
    case MetricConstraint::Nonnegativity:
      os << "d(" << long_edge.u << "," << long_edge.v << ") >= 0";
      break;
    case MetricConstraint::TriangleInequality: {
      Vertex mid = a;
      for (Vertex v : triangle.vertices)
        if (v != long_edge.u && v != long_edge.v) mid = v;
      os << "d(" << long_edge.u << "," << long_edge.v << ") <= d(" << long_edge.u << "," << mid
         << ") + d(" << mid << "," << long_edge.v << ")";
      break;
    }
    case MetricConstraint::Perimeter:
      os << "d(" << a << "," << b << ") + d(" << a << "," << c << ") + d(" << b << "," << c << ") <= 2";
      break;
  }
  os << " violated by " << excess.get_str();
  return os.str();
}

MetricReport metric_polytope_contains(const WeightedGraph& d) {
  if (d.n() < 3) throw Error(ErrorKind::InvalidInput, "metric check needs n >= 3");
  MetricReport report;
  bool cone_ok = true;
  bool perimeter_ok = true;
  for (const Edge& e : all_edges(d.n())) {
    if (d.weight(e) < 0) {
      MetricViolation v;
      v.kind = MetricConstraint::Nonnegativity;
      v.long_edge = e;
      v.excess = -d.weight(e);
      report.violations.push_back(v);
      cone_ok = false;
    }
  }
  for (const Triangle& t : all_triangles(d.n())) {
    auto edges = t.edges();
    Rational perimeter = 0;
    for (const Edge& e : edges) perimeter += d.weight(e);
    for (std::size_t i = 0; i < 3; ++i) {
      Rational excess = 2 * d.weight(edges[i]) - perimeter;  // d(long) - (other two)
      if (excess > 0) {
        MetricViolation v;
        v.kind = MetricConstraint::TriangleInequality;
        v.triangle = t;
        v.long_edge = edges[i];
        v.excess = excess;
        report.violations.push_back(v);
        cone_ok = false;
      }
    }
    if (perimeter > 2) {
      MetricViolation v;
      v.kind = MetricConstraint::Perimeter;
      v.triangle = t;
      v.excess = perimeter - 2;
      report.violations.push_back(v);
      perimeter_ok = false;
    } else if (perimeter == 2) {
      ++report.tight_perimeter;
    }
  }
  report.in_metric_cone = cone_ok;
  report.in_metric_polytope = cone_ok && perimeter_ok;
  return report;
}

void write_certificate(std::ostream& out, const WeightedGraph& g, const MembershipResult& result) {
  if (result.verdict == Verdict::Member) {
    auto triangles = all_triangles(g.n());
    const auto& x = result.coefficients.value();
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0) continue;
      const auto& [a, b, c] = triangles[k].vertices;
      out << a << ' ' << b << ' ' << c << ' ' << x[k].get_num().get_str() << '/'
          << x[k].get_den().get_str() << '\n';
    }
    return;
  }
  const auto& s = result.separator.value();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i].get_str();
  }
  out << '\n';
}

MembershipResult read_certificate(std::istream& in, int n, Verdict verdict) {
  MembershipResult result;
  result.verdict = verdict;
  std::string line;
  if (verdict == Verdict::Member) {
    std::vector<Rational> x(triple_count(n));
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      Vertex a, b, c;
      std::string w;
      if (!(ls >> a >> b >> c >> w)) continue;
      x[triangle_index(make_triangle(a, b, c), n)] = parse_rational(w);
    }
    result.coefficients = std::move(x);
    return result;
  }
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Rational> w;
    std::string tok;
    while (ls >> tok) w.push_back(parse_rational(tok));
    if (w.empty()) continue;
    result.separator = WeightedGraph(n, std::move(w));
    break;
  }
  if (!result.separator) throw Error(ErrorKind::Parse, "certificate has no separator line");
  return result;
}

WeightedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int n = 0;
  std::vector<std::pair<Edge, Rational>> edges;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n == 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n" || n < 2) fail("expected 'n <integer>' header");
      std::string rest;
      if (ls >> rest) fail("trailing text after header");
      continue;
    }
    std::string su, sv, sw, extra;
    if (!(ls >> su >> sv >> sw) || (ls >> extra)) fail("expected '<u> <v> <weight>'");
    Vertex u = 0, v = 0;
    try {
      std::size_t pu = 0, pv = 0;
      u = std::stoi(su, &pu);
      v = std::stoi(sv, &pv);
      if (pu != su.size() || pv != sv.size()) fail("vertex labels must be integers");
    } catch (const std::logic_error&) {
      fail("vertex labels must be integers");
    }
    if (u < 1 || v < 1 || u > n || v > n || u == v) fail("invalid edge {" + su + "," + sv + "}");
    try {
      edges.emplace_back(make_edge(u, v), parse_rational(sw));
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (n == 0) throw Error(ErrorKind::Parse, "missing 'n <integer>' header");
  try {
    return graph_from_edges(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "n " << g.n() << '\n';
  for (const Edge& e : all_edges(g.n())) {
    const Rational& w = g.weight(e);
    if (w != 0) out << e.u << ' ' << e.v << ' ' << w.get_str() << '\n';
  }
}

}  // namespace tricone
