#include "tricone/symmetry.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tricone/error.hpp"
#include "tricone/exact.hpp"
#include "tricone/families.hpp"
#include "tricone/parallel.hpp"

namespace tricone {

VertexPermutation::VertexPermutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (Vertex v : images_) {
    if (v < 1 || v > static_cast<Vertex>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::InvalidInput, "not a permutation of [n]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

VertexPermutation VertexPermutation::identity(int n) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return VertexPermutation(std::move(images));
}

VertexPermutation VertexPermutation::transposition(int n, Vertex a, Vertex b) {
  auto images = identity(n).images_;
  std::swap(images.at(static_cast<std::size_t>(a - 1)), images.at(static_cast<std::size_t>(b - 1)));
  return VertexPermutation(std::move(images));
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& other) const {
  if (other.n() != n()) throw Error(ErrorKind::DimensionMismatch, "permutation sizes differ");
  std::vector<Vertex> images(images_.size());
  for (Vertex v = 1; v <= n(); ++v) images[static_cast<std::size_t>(v - 1)] = (*this)(other(v));
  return VertexPermutation(std::move(images));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<Vertex> images(images_.size());
  for (Vertex v = 1; v <= n(); ++v) images[static_cast<std::size_t>((*this)(v) - 1)] = v;
  return VertexPermutation(std::move(images));
}

WeightedGraph permute(const WeightedGraph& y, const VertexPermutation& alpha) {
  if (alpha.n() != y.n()) throw Error(ErrorKind::DimensionMismatch, "permutation size mismatch");
  std::vector<Rational> out(y.size());
  for (Vertex v = 2; v <= y.n(); ++v)
    for (Vertex u = 1; u < v; ++u)
      out[edge_index(make_edge(alpha(u), alpha(v)), y.n())] = y.weight(Edge{u, v});
  return WeightedGraph(y.n(), std::move(out));
}

std::vector<std::int64_t> permute(std::span<const std::int64_t> y, int n,
                                  const VertexPermutation& alpha) {
  if (alpha.n() != n || y.size() != pair_count(n)) {
    throw Error(ErrorKind::DimensionMismatch, "permutation size mismatch");
  }
  std::vector<std::int64_t> out(y.size());
  std::size_t i = 0;
  for (Vertex v = 2; v <= n; ++v)
    for (Vertex u = 1; u < v; ++u) out[edge_index(make_edge(alpha(u), alpha(v)), n)] = y[i++];
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace {

struct SearchState {
  std::vector<std::int8_t> order;  // 0-based vertices at canonical positions
  std::uint64_t multiplicity = 1;
};

}  // namespace

CanonicalLabel canonical_label(std::span<const std::int64_t> y, int n) {
  if (n < 2 || n > 64 || y.size() != pair_count(n)) {
    throw Error(ErrorKind::DimensionMismatch, "canonical_label: bad length");
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int64_t> adj(un * un, 0);
  {
    std::size_t i = 0;
    for (std::size_t v = 1; v < un; ++v)
      for (std::size_t u = 0; u < v; ++u) {
        adj[u * un + v] = y[i];
        adj[v * un + u] = y[i];
        ++i;
      }
  }

  // Twin classes: u ~ w iff swapping u and w fixes y. Equal sorted incident
  // weight multisets are necessary, so they gate the full comparison.
  std::vector<std::vector<std::int64_t>> invariant(un);
  for (std::size_t u = 0; u < un; ++u) {
    for (std::size_t x = 0; x < un; ++x)
      if (x != u) invariant[u].push_back(adj[u * un + x]);
    std::sort(invariant[u].begin(), invariant[u].end());
  }
  std::vector<std::size_t> twin(un);
  for (std::size_t u = 0; u < un; ++u) {
    twin[u] = u;
    for (std::size_t w = 0; w < u; ++w) {
      if (twin[w] != w || invariant[u] != invariant[w]) continue;
      bool same = true;
      for (std::size_t x = 0; x < un && same; ++x)
        if (x != u && x != w && adj[u * un + x] != adj[w * un + x]) same = false;
      if (same) {
        twin[u] = w;
        break;
      }
    }
  }

  // Level-synchronous search: every surviving partial ordering realizes the
  // lexicographically largest prefix. Twins among the unplaced vertices give
  // isomorphic subtrees, so only one representative per class is expanded.
  std::vector<SearchState> states(1);
  std::vector<std::int64_t> best;
  std::vector<std::int64_t> block;
  std::vector<bool> placed(un);
  for (std::size_t k = 0; k < un; ++k) {
    bool have_best = false;
    best.assign(k, 0);
    block.assign(k, 0);
    for (const auto& s : states) {
      std::fill(placed.begin(), placed.end(), false);
      for (auto v : s.order) placed[static_cast<std::size_t>(v)] = true;
      for (std::size_t v = 0; v < un; ++v) {
        if (placed[v]) continue;
        for (std::size_t i = 0; i < k; ++i) block[i] = adj[static_cast<std::size_t>(s.order[i]) * un + v];
        if (!have_best || std::lexicographical_compare(best.begin(), best.end(), block.begin(), block.end())) {
          best = block;
          have_best = true;
        }
      }
    }
    std::vector<SearchState> next;
    std::vector<std::uint64_t> class_size(un);
    for (const auto& s : states) {
      std::fill(placed.begin(), placed.end(), false);
      for (auto v : s.order) placed[static_cast<std::size_t>(v)] = true;
      std::fill(class_size.begin(), class_size.end(), 0);
      for (std::size_t v = 0; v < un; ++v)
        if (!placed[v]) ++class_size[twin[v]];
      std::vector<bool> expanded(un, false);
      for (std::size_t v = 0; v < un; ++v) {
        if (placed[v] || expanded[twin[v]]) continue;
        bool equal = true;
        for (std::size_t i = 0; i < k && equal; ++i)
          equal = adj[static_cast<std::size_t>(s.order[i]) * un + v] == best[i];
        if (!equal) continue;
        expanded[twin[v]] = true;
        SearchState child;
        child.order = s.order;
        child.order.push_back(static_cast<std::int8_t>(v));
        child.multiplicity = s.multiplicity * class_size[twin[v]];
        next.push_back(std::move(child));
      }
    }
    states = std::move(next);
  }

  CanonicalLabel label;
  label.form.assign(y.size(), 0);
  const auto& order = states.front().order;
  std::size_t i = 0;
  for (std::size_t v = 1; v < un; ++v)
    for (std::size_t u = 0; u < v; ++u)
      label.form[i++] = adj[static_cast<std::size_t>(order[u]) * un + static_cast<std::size_t>(order[v])];
  for (const auto& s : states) label.stabilizer_order += s.multiplicity;
  for (auto v : order) label.ordering.push_back(static_cast<Vertex>(v) + 1);
  return label;
}

WeightedGraph canonical_form(const WeightedGraph& y) {
  auto ints = standard_form(y).to_integers();
  auto label = canonical_label(ints, y.n());
  return WeightedGraph::from_integers(y.n(), label.form);
}

std::uint64_t stabilizer_order(const WeightedGraph& y) {
  if (y.is_zero()) return factorial(y.n());
  return canonical_label(standard_form(y).to_integers(), y.n()).stabilizer_order;
}

std::uint64_t orbit_size(const WeightedGraph& y) { return factorial(y.n()) / stabilizer_order(y); }

std::vector<std::vector<Rational>> vertex_invariants(const WeightedGraph& y) {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(y.n()));
  for (Vertex u = 1; u <= y.n(); ++u) {
    auto& inv = out[static_cast<std::size_t>(u - 1)];
    for (Vertex x = 1; x <= y.n(); ++x)
      if (x != u) inv.push_back(y.weight(make_edge(u, x)));
    std::sort(inv.begin(), inv.end());
  }
  return out;
}

std::uint64_t FacetClass::orbit_size() const {
  return factorial(canonical_rep.n()) / stabilizer_order;
}

std::vector<FacetClass> classify(std::span<const WeightedGraph> facets, const ClassifyOptions& options) {
  if (facets.empty()) return {};
  const int n = facets.front().n();
  for (const auto& f : facets)
    if (f.n() != n) throw Error(ErrorKind::InvalidInput, "classify: mixed vertex counts");

  std::vector<CanonicalLabel> labels(facets.size());
  parallel_for(facets.size(), options.threads, [&](std::size_t i) {
    labels[i] = canonical_label(standard_form(facets[i]).to_integers(), n);
  });

  std::map<std::vector<std::int64_t>, FacetClass> groups;
  for (const auto& label : labels) {
    auto it = groups.find(label.form);
    if (it == groups.end()) {
      FacetClass c;
      c.canonical_rep = WeightedGraph::from_integers(n, label.form);
      c.stabilizer_order = label.stabilizer_order;
      c.category = mod3_category(c.canonical_rep);
      it = groups.emplace(label.form, std::move(c)).first;
    }
    ++it->second.count;
  }
  std::vector<FacetClass> out;
  out.reserve(groups.size());
  for (auto& [key, c] : groups) out.push_back(std::move(c));
  return out;
}

std::string format_class_row(const FacetClass& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.canonical_rep.size(); ++i) {
    if (i) os << ' ';
    os << c.canonical_rep[i].get_str();
  }
  os << ';' << c.count << ';' << c.stabilizer_order << ';' << c.category << ';' << c.degree;
  return os.str();
}

FacetClass parse_class_row(const std::string& line, int n) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ';')) fields.push_back(field);
  if (fields.size() != 5) throw Error(ErrorKind::Parse, "class row needs 5 fields: " + line);
  std::vector<Rational> rep;
  std::istringstream vs(fields[0]);
  std::string tok;
  while (vs >> tok) rep.push_back(parse_rational(tok));
  FacetClass c;
  if (rep.size() != pair_count(n)) throw Error(ErrorKind::Parse, "class row has wrong length: " + line);
  c.canonical_rep = WeightedGraph(n, std::move(rep));
  try {
    c.count = std::stoull(fields[1]);
    c.stabilizer_order = std::stoull(fields[2]);
    c.category = std::stoi(fields[3]);
    c.degree = std::stoll(fields[4]);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad numeric field in class row: " + line);
  }
  if (c.category < 0 || c.category > 2 || c.degree < -1) {
    throw Error(ErrorKind::Parse, "field out of range in class row: " + line);
  }
  return c;
}

void write_class_csv(std::ostream& out, std::span<const FacetClass> classes) {
  for (const auto& c : classes) out << format_class_row(c) << '\n';
}

std::vector<FacetClass> read_class_csv(std::istream& in, int n) {
  std::vector<FacetClass> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_class_row(line, n));
  }
  return out;
}

}  // namespace tricone
