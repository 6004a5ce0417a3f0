// Python bindings for the tricone core. Vectors cross the boundary as lists in
// colex order; rational entries are returned as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tricone/error.hpp"
#include "tricone/exact.hpp"
#include "tricone/facets.hpp"
#include "tricone/families.hpp"
#include "tricone/membership.hpp"
#include "tricone/symmetry.hpp"

namespace py = pybind11;
using namespace tricone;

namespace {

WeightedGraph to_graph(int n, const py::sequence& values) {
  std::vector<Rational> w;
  for (const auto& v : values) w.push_back(parse_rational(py::str(v).cast<std::string>()));
  return WeightedGraph(n, std::move(w));
}

py::list to_python(const WeightedGraph& g) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::list out;
  for (const auto& q : g.weights()) {
    if (q.get_den() == 1) {
      out.append(py::int_(py::str(q.get_num().get_str())));
    } else {
      out.append(fraction(q.get_str()));
    }
  }
  return out;
}

py::list to_python(const std::vector<Rational>& v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::list out;
  for (const auto& q : v) out.append(fraction(q.get_str()));
  return out;
}

ConeDescription cone_from(int n, const std::vector<py::sequence>& facets) {
  ConeDescription cone;
  cone.n = n;
  for (const auto& f : facets) cone.facets.push_back(make_facet_normal(to_graph(n, f)));
  return cone;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact facet enumeration and membership for the cone generated by triangles";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("pair_count", [](int n) { return pair_count(n); });

  m.def(
      "enumerate_facets",
      [](int n) {
        ConeDescription cone;
        {
          py::gil_scoped_release release;
          cone = enumerate_facets(n);
        }
        py::list out;
        for (const auto& f : cone.facets) out.append(to_python(f.vector));
        return out;
      },
      py::arg("n"), "All facet normals of the cone for 5 <= n <= 8, in standard form.");

  m.def(
      "is_facet",
      [](int n, const py::sequence& y) {
        FacetReport r = is_facet_normal(to_graph(n, y));
        py::dict d;
        d["supporting"] = r.supporting;
        d["facet"] = r.facet;
        d["zero_triangles"] = r.zero_triangles.size();
        d["zero_rank"] = r.zero_rank;
        d["required_rank"] = r.required_rank;
        return d;
      },
      py::arg("n"), py::arg("y"));

  m.def(
      "canonical_form",
      [](int n, const py::sequence& y) {
        WeightedGraph g = to_graph(n, y);
        return py::make_tuple(to_python(canonical_form(g)), stabilizer_order(g));
      },
      py::arg("n"), py::arg("y"), "Canonical representative and stabilizer order.");

  m.def(
      "classify",
      [](int n, const std::vector<py::sequence>& facets) {
        std::vector<WeightedGraph> vectors;
        for (const auto& f : facets) vectors.push_back(to_graph(n, f));
        py::list out;
        for (const auto& c : classify(vectors)) {
          py::dict d;
          d["rep"] = to_python(c.canonical_rep);
          d["count"] = c.count;
          d["stabilizer"] = c.stabilizer_order;
          d["category"] = c.category;
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("facets"));

  m.def(
      "facet_degree",
      [](int n, const py::sequence& rep, const std::vector<py::sequence>& facets) {
        ConeDescription cone = cone_from(n, facets);
        return facet_degree(make_facet_normal(to_graph(n, rep)), cone);
      },
      py::arg("n"), py::arg("rep"), py::arg("facets"), "Number of facets adjacent to rep in the full list.");

  m.def(
      "sample_facet",
      [](int n, std::uint64_t seed, std::int64_t range) {
        return to_python(sample_facet(n, seed, SampleOptions{range}).vector);
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("range") = 1000);

  m.def(
      "decide_membership",
      [](int n, const py::sequence& g, bool facetize) {
        WeightedGraph graph = to_graph(n, g);
        MembershipResult r = decide_membership(graph, MembershipOptions{facetize});
        if (!verify_certificate(graph, r)) throw Error(ErrorKind::Integrity, "certificate failed verification");
        py::dict d;
        d["member"] = r.verdict == Verdict::Member;
        if (r.coefficients) d["coefficients"] = to_python(*r.coefficients);
        if (r.separator) d["separator"] = to_python(*r.separator);
        return d;
      },
      py::arg("n"), py::arg("g"), py::arg("facetize") = false);

  m.def("trivial_facet", [](int n, int u, int v) { return to_python(trivial_facet(n, make_edge(u, v)).vector); },
        py::arg("n"), py::arg("u") = 1, py::arg("v") = 2);
  m.def("star_facet",
        [](int n, int center, int neg) { return to_python(star_facet(n, center, neg).vector); },
        py::arg("n"), py::arg("center"), py::arg("neg"));
  m.def("cut_facet",
        [](int n, const std::vector<int>& side) { return to_python(cut_facet(CutPartition{n, side}).vector); },
        py::arg("n"), py::arg("side"));
  m.def("binary_star_facet",
        [](int n, const std::vector<int>& a, const std::vector<int>& b) {
          return to_python(binary_star_facet(n, a, b).vector);
        },
        py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("lex_product_c4", [](int m_) { return to_python(lex_product_c4(m_)); }, py::arg("m"));
  m.def(
      "vertex_split",
      [](int n, const py::sequence& y) { return to_python(vertex_split(make_facet_normal(to_graph(n, y))).vector); },
      py::arg("n"), py::arg("y"));
  m.def(
      "mod3_category", [](int n, const py::sequence& y) { return mod3_category(to_graph(n, y)); }, py::arg("n"),
      py::arg("y"));
  m.def(
      "metric_check",
      [](int n, const py::sequence& d) {
        MetricReport r = metric_polytope_contains(to_graph(n, d));
        py::dict out;
        out["in_metric_cone"] = r.in_metric_cone;
        out["in_metric_polytope"] = r.in_metric_polytope;
        out["tight_perimeter"] = r.tight_perimeter;
        py::list violations;
        for (const auto& v : r.violations) violations.append(v.describe());
        out["violations"] = violations;
        return out;
      },
      py::arg("n"), py::arg("d"));
}
