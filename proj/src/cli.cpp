#include "tricone/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "tricone/error.hpp"
#include "tricone/exact.hpp"
#include "tricone/facets.hpp"
#include "tricone/families.hpp"
#include "tricone/membership.hpp"
#include "tricone/parallel.hpp"
#include "tricone/symmetry.hpp"

namespace tricone {

namespace {

struct RunConfig {
  int n = 0;
  int m = 0;
  std::string input;
  std::string output;
  std::string classes_path;
  std::string certificate;
  std::string vector_text;
  std::string order = "colex";
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::int64_t range = 1000;
  unsigned threads = default_thread_count();
  bool progress = false;
  bool facetize = false;
  bool allow_long = false;
  bool no_degree = false;
  bool degree = false;
  std::string family;
  std::string edge_text = "1,2";
  Vertex center = 0;
  Vertex neg = 1;
  std::string side_a;
  std::string side_b;
};

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "bad vertex label '" + tok + "'");
    }
  }
  return out;
}

std::string join(const WeightedGraph& y) {
  std::string s;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i) s += ' ';
    s += y[i].get_str();
  }
  return s;
}

// Writes to the named file, or to `fallback` when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  return in;
}

void print_classes(std::ostream& out, const std::vector<FacetClass>& classes, std::size_t total) {
  out << classes.size() << " classes, " << total << " facets\n";
  out << "representative ; # ; stab ; category ; deg\n";
  for (const auto& c : classes) {
    out << "(" << join(c.canonical_rep) << ") ; " << c.count << " ; " << c.stabilizer_order << " ; "
        << c.category << " ; " << c.degree << '\n';
  }
}

void fill_degrees(std::vector<FacetClass>& classes, const ConeDescription& cone, unsigned threads) {
  for (auto& c : classes) {
    auto it = std::find_if(cone.facets.begin(), cone.facets.end(),
                           [&](const FacetNormal& f) { return f.vector == c.canonical_rep; });
    if (it == cone.facets.end()) {
      throw Error(ErrorKind::Integrity, "class representative missing from the facet list");
    }
    c.degree = static_cast<std::int64_t>(facet_degree(*it, cone, threads));
  }
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 5 || cfg.n > 8) {
    err << "enumerate: n must be between 5 and 8\n";
    return kExitUsage;
  }
  if (cfg.n == 8 && !cfg.allow_long) {
    err << "enumerate: n = 8 is long-running; pass --allow-long\n";
    return kExitUsage;
  }
  EnumerateOptions options;
  options.threads = cfg.threads;
  options.order = cfg.order == "most-violated" ? InsertionOrder::MostViolatedFirst : InsertionOrder::Colex;
  if (cfg.progress) options.progress = &err;
  ConeDescription cone = enumerate_facets(cfg.n, options);

  std::vector<WeightedGraph> vectors;
  for (const auto& f : cone.facets) vectors.push_back(f.vector);
  if (!cfg.output.empty()) {
    Sink sink(cfg.output, out);
    write_facet_list(sink.get(), cfg.n, vectors);
  }
  auto classes = classify(vectors, ClassifyOptions{cfg.threads});
  if (!cfg.no_degree) fill_degrees(classes, cone, cfg.threads);
  if (!cfg.classes_path.empty()) {
    Sink sink(cfg.classes_path, out);
    write_class_csv(sink.get(), classes);
  }
  print_classes(out, classes, cone.facets.size());
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  auto in = open_input(cfg.input);
  int n = 0;
  auto vectors = read_facet_list(in, &n);
  auto classes = classify(vectors, ClassifyOptions{cfg.threads});
  if (cfg.degree) {
    ConeDescription cone;
    cone.n = n;
    for (const auto& v : vectors) cone.facets.push_back(make_facet_normal(v));
    fill_degrees(classes, cone, cfg.threads);
  }
  if (!cfg.output.empty()) {
    Sink sink(cfg.output, out);
    write_class_csv(sink.get(), classes);
  }
  print_classes(out, classes, vectors.size());
  return kExitOk;
}

int cmd_member(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  WeightedGraph g;
  try {
    auto in = open_input(cfg.input);
    g = read_graph(in);
  } catch (const Error& e) {
    err << "member: " << e.what() << '\n';
    return kExitUsage;
  }
  if (g.n() < 3) {
    err << "member: n must be at least 3\n";
    return kExitUsage;
  }
  MembershipResult result = decide_membership(g, MembershipOptions{cfg.facetize});
  if (!verify_certificate(g, result)) throw Error(ErrorKind::Integrity, "certificate failed verification");
  auto flags = arithmetic_flags(g);
  out << (result.verdict == Verdict::Member ? "member" : "non-member") << '\n';
  if (result.verdict == Verdict::NonMember) {
    out << "separator: " << join(*result.separator) << '\n';
    out << "separator value: " << inner_product(*result.separator, g).get_str() << '\n';
  }
  out << "even degrees: " << (flags.all_degrees_even ? "yes" : "no")
      << "; edge count divisible by 3: " << (flags.edge_count_divisible_by_3 ? "yes" : "no") << '\n';
  if (!cfg.certificate.empty()) {
    Sink sink(cfg.certificate, out);
    write_certificate(sink.get(), g, result);
  }
  return result.verdict == Verdict::Member ? kExitOk : kExitNegative;
}

WeightedGraph vector_from_config(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    auto in = open_input(cfg.input);
    auto vectors = read_facet_list(in);
    if (vectors.empty()) throw Error(ErrorKind::Parse, "no vector in " + cfg.input);
    return vectors.front();
  }
  if (cfg.n < 3) throw Error(ErrorKind::Parse, "verify-facet needs --n with --vector");
  std::istringstream vs(cfg.vector_text);
  std::vector<Rational> w;
  std::string tok;
  while (vs >> tok) {
    tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
    if (!tok.empty()) w.push_back(parse_rational(tok));
  }
  if (w.size() != pair_count(cfg.n)) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(pair_count(cfg.n)) + " entries, got " +
                                      std::to_string(w.size()));
  }
  return WeightedGraph(cfg.n, std::move(w));
}

int cmd_verify_facet(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  WeightedGraph y;
  try {
    y = vector_from_config(cfg);
  } catch (const Error& e) {
    err << "verify-facet: " << e.what() << '\n';
    return kExitUsage;
  }
  if (y.is_zero()) {
    err << "verify-facet: zero vector\n";
    return kExitUsage;
  }
  WeightedGraph s = standard_form(y);
  FacetReport report = is_facet_normal(s);
  out << "supporting: " << (report.supporting ? "yes" : "no") << '\n';
  out << "zero triangles: " << report.zero_triangles.size() << '\n';
  out << "zero-set rank: " << report.zero_rank << " (required " << report.required_rank << ")\n";
  if (!report.facet) {
    std::string why = !report.supporting            ? "not supporting"
                      : report.zero_triangles.empty() ? "empty zero set"
                                                      : "zero-set rank too small";
    out << "facet: no (" << why << ")\n";
    return kExitNegative;
  }
  auto stab = stabilizer_order(s);
  auto orbit = factorial(s.n()) / stab;
  int category = mod3_category(s);
  out << "facet: yes\n";
  out << "stabilizer: " << stab << '\n';
  out << "orbit: " << orbit << '\n';
  out << "category: " << category << '\n';
  if (auto ext = sign_extremes_check(s)) {
    out << "sign extremes: a=" << ext->max_positive.get_str() << " b=" << ext->min_negative.get_str()
        << (ext->bounds_hold ? " (bounds hold)" : " (bounds FAIL)") << '\n';
  } else {
    out << "sign extremes: not applicable (no negative entry)\n";
  }
  out << "canonical form: (" << join(canonical_form(s)) << ")\n";
  out << "summary: facet: yes; stabilizer: " << stab << "; orbit " << orbit << "; category: " << category
      << '\n';
  return kExitOk;
}

int cmd_lift(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<WeightedGraph> inputs;
  int n = 0;
  try {
    auto in = open_input(cfg.input);
    inputs = read_facet_list(in, &n);
  } catch (const Error& e) {
    err << "lift: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<WeightedGraph> lifted;
  int status = kExitOk;
  for (const auto& v : inputs) {
    try {
      lifted.push_back(vertex_split(make_facet_normal(v)).vector);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisFailure && e.kind() != ErrorKind::Integrity) throw;
      err << "lift: (" << join(v) << "): " << e.what() << '\n';
      status = kExitNegative;
    }
  }
  Sink sink(cfg.output, out);
  write_facet_list(sink.get(), n + 1, lifted);
  return status;
}

int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Sink sink(cfg.output, out);
  if (cfg.family == "c4k") {
    write_graph(sink.get(), lex_product_c4(cfg.m));
    return kExitOk;
  }
  FacetNormal f;
  if (cfg.family == "trivial") {
    auto ends = parse_vertex_list(cfg.edge_text);
    if (ends.size() != 2) throw Error(ErrorKind::Parse, "--edge expects u,v");
    f = trivial_facet(cfg.n, make_edge(ends[0], ends[1]));
  } else if (cfg.family == "star") {
    f = star_facet(cfg.n, cfg.center == 0 ? cfg.n : cfg.center, cfg.neg);
  } else if (cfg.family == "cut") {
    f = cut_facet(CutPartition{cfg.n, parse_vertex_list(cfg.side_a)});
  } else if (cfg.family == "binary-star") {
    f = binary_star_facet(cfg.n, parse_vertex_list(cfg.side_a), parse_vertex_list(cfg.side_b));
  } else {
    throw Error(ErrorKind::Parse, "unknown family '" + cfg.family + "'");
  }
  std::vector<WeightedGraph> one{f.vector};
  write_facet_list(sink.get(), cfg.n, one);
  return kExitOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 5) {
    err << "sample: n must be at least 5\n";
    return kExitUsage;
  }
  std::vector<WeightedGraph> samples(cfg.count);
  parallel_for(cfg.count, cfg.threads, [&](std::size_t i) {
    samples[i] = sample_facet(cfg.n, cfg.seed + i, SampleOptions{cfg.range}).vector;
  });
  if (!cfg.output.empty()) {
    Sink sink(cfg.output, out);
    write_facet_list(sink.get(), cfg.n, samples);
  }
  auto classes = classify(samples, ClassifyOptions{cfg.threads});
  out << cfg.count << " verified facets, " << classes.size() << " classes\n";
  for (const auto& c : classes) {
    out << "(" << join(c.canonical_rep) << ") : " << c.count << " (orbit " << c.orbit_size()
        << ", category " << c.category << ")\n";
  }
  return kExitOk;
}

int cmd_metric_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  WeightedGraph d;
  try {
    auto in = open_input(cfg.input);
    d = read_graph(in);
  } catch (const Error& e) {
    err << "metric-check: " << e.what() << '\n';
    return kExitUsage;
  }
  auto report = metric_polytope_contains(d);
  out << "metric cone: " << (report.in_metric_cone ? "yes" : "no") << '\n';
  out << "metric polytope: " << (report.in_metric_polytope ? "yes" : "no") << '\n';
  out << "tight perimeter inequalities: " << report.tight_perimeter << '\n';
  out << "violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) out << "  " << v.describe() << '\n';
  return report.in_metric_polytope ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for the cone of weighted graphs generated by triangles", "tricone"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate and classify all facets for 5 <= n <= 8");
  enumerate->add_option("--n", cfg.n, "Vertex count")->required();
  enumerate->add_option("--output", cfg.output, "Facet list file");
  enumerate->add_option("--classes", cfg.classes_path, "Class CSV file");
  enumerate->add_option("--order", cfg.order, "Constraint insertion order")
      ->check(CLI::IsMember({"colex", "most-violated"}));
  enumerate->add_flag("--progress", cfg.progress, "Ray counts per insertion step on stderr");
  enumerate->add_flag("--allow-long", cfg.allow_long, "Permit the long-running n = 8 case");
  enumerate->add_flag("--no-degree", cfg.no_degree, "Skip facet degrees");
  enumerate->add_option("--threads", cfg.threads, "Worker threads");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a facet list up to isomorphism");
  classify_cmd->add_option("--input", cfg.input, "Facet list file")->required();
  classify_cmd->add_option("--output", cfg.output, "Class CSV file");
  classify_cmd->add_flag("--degree", cfg.degree, "Compute degrees (input must be the complete list)");
  classify_cmd->add_option("--threads", cfg.threads, "Worker threads");

  auto* member = app.add_subcommand("member", "Decide fractional triangle decomposability");
  member->add_option("--graph", cfg.input, "Sparse weighted-graph file")->required();
  member->add_option("--certificate", cfg.certificate, "Certificate output file");
  member->add_flag("--facetize", cfg.facetize, "Walk the separator to a facet normal");

  auto* verify = app.add_subcommand("verify-facet", "Check the facet-normal conditions");
  verify->add_option("--vector", cfg.vector_text, "Dense vector, colex order");
  verify->add_option("--n", cfg.n, "Vertex count for --vector");
  verify->add_option("--file", cfg.input, "Facet list file (first vector is used)");

  auto* lift = app.add_subcommand("lift", "Vertex-split every facet in a list");
  lift->add_option("--input", cfg.input, "Facet list file")->required();
  lift->add_option("--output", cfg.output, "Lifted facet list file");

  auto* family = app.add_subcommand("family", "Emit a named facet family or the C4 x K_{6m+3} graph");
  family->add_option("kind", cfg.family, "trivial | star | cut | binary-star | c4k")
      ->required()
      ->check(CLI::IsMember({"trivial", "star", "cut", "binary-star", "c4k"}));
  family->add_option("--n", cfg.n, "Vertex count");
  family->add_option("--m", cfg.m, "Block parameter for c4k");
  family->add_option("--edge", cfg.edge_text, "Edge u,v for trivial");
  family->add_option("--center", cfg.center, "Star center (default n)");
  family->add_option("--neg", cfg.neg, "Star negative leaf");
  family->add_option("--a,--side", cfg.side_a, "Cut side A or binary-star leaves of 1");
  family->add_option("--b", cfg.side_b, "Binary-star leaves of 2");
  family->add_option("--output", cfg.output, "Output file");

  auto* sample = app.add_subcommand("sample", "Sample random facets by exact LP");
  sample->add_option("--n", cfg.n, "Vertex count")->required();
  sample->add_option("--count", cfg.count, "Number of samples");
  sample->add_option("--seed", cfg.seed, "First seed; sample i uses seed + i");
  sample->add_option("--range", cfg.range, "Objective entries uniform in [-range, range]");
  sample->add_option("--output", cfg.output, "Facet list file");
  sample->add_option("--threads", cfg.threads, "Worker threads");

  auto* metric = app.add_subcommand("metric-check", "Check membership in the metric cone and polytope");
  metric->add_option("--graph", cfg.input, "Sparse weighted-graph file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (cfg.threads == 0) cfg.threads = 1;

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (classify_cmd->parsed()) return cmd_classify(cfg, out, err);
    if (member->parsed()) return cmd_member(cfg, out, err);
    if (verify->parsed()) return cmd_verify_facet(cfg, out, err);
    if (lift->parsed()) return cmd_lift(cfg, out, err);
    if (family->parsed()) return cmd_family(cfg, out, err);
    if (sample->parsed()) return cmd_sample(cfg, out, err);
    if (metric->parsed()) return cmd_metric_check(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Integrity ? kExitNegative : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tricone
