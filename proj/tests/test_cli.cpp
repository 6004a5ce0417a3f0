#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tricone/cli.hpp"

using namespace tricone;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents = "") {
  auto dir = std::filesystem::temp_directory_path() / "tricone_cli_test";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  if (!contents.empty()) std::ofstream(p) << contents;
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"enumerate"}).code == kExitUsage);
  CHECK(run({"enumerate", "--n", "four"}).code == kExitUsage);
  CHECK(run({"enumerate", "--n", "9"}).code == kExitUsage);
  CHECK(run({"enumerate", "--n", "6", "--order", "random"}).code == kExitUsage);
  Run long_run = run({"enumerate", "--n", "8"});
  CHECK(long_run.code == kExitUsage);
  CHECK(long_run.err.find("--allow-long") != std::string::npos);
  CHECK(run({"member", "--graph", "/nonexistent/graph.txt"}).code == kExitUsage);
  CHECK(run({"family", "wheel", "--n", "6"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("enumerate writes the golden class table and facet list") {
  auto classes = temp_file("tau6.csv");
  auto facets = temp_file("tau6.txt");
  Run r = run({"enumerate", "--n", "6", "--classes", classes.string(), "--output", facets.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("4 classes, 70 facets") != std::string::npos);
  CHECK(slurp(classes) == slurp(std::filesystem::path(TRICONE_TEST_DATA) / "tau6_classes.csv"));
  std::string list = slurp(facets);
  CHECK(list.rfind("n 6\n", 0) == 0);
  CHECK(std::count(list.begin(), list.end(), '\n') == 71);

  // classify reproduces the same table (with degrees) from the facet list.
  auto again = temp_file("tau6_again.csv");
  Run c = run({"classify", "--input", facets.string(), "--output", again.string(), "--degree"});
  REQUIRE(c.code == kExitOk);
  CHECK(slurp(again) == slurp(classes));
}

TEST_CASE("output is byte-identical across runs, orders and thread counts") {
  Run a = run({"enumerate", "--n", "7", "--threads", "1"});
  Run b = run({"enumerate", "--n", "7", "--threads", "4", "--order", "most-violated"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  Run s1 = run({"sample", "--n", "7", "--count", "4", "--seed", "3"});
  Run s2 = run({"sample", "--n", "7", "--count", "4", "--seed", "3", "--threads", "3"});
  CHECK(s1.out == s2.out);
}

TEST_CASE("progress goes to stderr only") {
  Run r = run({"enumerate", "--n", "6", "--progress", "--no-degree"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("rays 70") != std::string::npos);
  CHECK(r.out.find("rays") == std::string::npos);
  CHECK(r.out.find(" ; -1\n") != std::string::npos);
}

TEST_CASE("verify-facet summaries") {
  Run ones = run({"verify-facet", "--n", "6", "--vector", "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1"});
  CHECK(ones.code == kExitNegative);
  CHECK(ones.out.find("facet: no (empty zero set)") != std::string::npos);

  auto star = temp_file("star7.txt");
  Run fam = run({"family", "star", "--n", "7", "--output", star.string()});
  REQUIRE(fam.code == kExitOk);
  Run s = run({"verify-facet", "--file", star.string()});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("facet: yes; stabilizer: 120; orbit 42") != std::string::npos);

  Run nine = run({"verify-facet", "--n", "9", "--vector",
                  "4 2 2 2 0 0 1 1 -1 1 1 -1 -1 1 2 0 0 2 0 -1 1 -1 1 1 -1 0 0 1 -2 -2 0 2 1 3 2 3"});
  CHECK(nine.code == kExitOk);
  CHECK(nine.out.find("facet: yes; stabilizer: 1;") != std::string::npos);

  Run unsupported = run({"verify-facet", "--n", "5", "--vector", "-1 0 0 0 0 0 0 0 0 0"});
  CHECK(unsupported.code == kExitNegative);
  CHECK(unsupported.out.find("facet: no (not supporting)") != std::string::npos);
  CHECK(run({"verify-facet", "--n", "5", "--vector", "1 0 0"}).code == kExitUsage);
  CHECK(run({"verify-facet", "--n", "5", "--vector", "0 0 0 0 0 0 0 0 0 0"}).code == kExitUsage);
}

TEST_CASE("member: exit codes and certificates") {
  auto c4k = temp_file("c4k.txt");
  REQUIRE(run({"family", "c4k", "--m", "0", "--output", c4k.string()}).code == kExitOk);
  auto cert = temp_file("c4k.cert");
  Run r = run({"member", "--graph", c4k.string(), "--certificate", cert.string()});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.rfind("non-member\n", 0) == 0);
  CHECK(r.out.find("even degrees: yes; edge count divisible by 3: yes") != std::string::npos);
  std::string separator = slurp(cert);
  CHECK(std::count(separator.begin(), separator.end(), '\n') == 1);

  auto k5 = temp_file("k5.txt", "n 5\n1 2 1\n1 3 1\n2 3 1\n1 4 1\n2 4 1\n3 4 1\n1 5 1\n2 5 1\n3 5 1\n4 5 1\n");
  auto kcert = temp_file("k5.cert");
  Run m = run({"member", "--graph", k5.string(), "--certificate", kcert.string()});
  CHECK(m.code == kExitOk);
  CHECK(m.out.rfind("member\n", 0) == 0);
  std::string coefficients = slurp(kcert);
  CHECK(std::count(coefficients.begin(), coefficients.end(), '\n') >= 4);

  auto broken = temp_file("broken.txt", "n 5\n1 2 x\n");
  Run b = run({"member", "--graph", broken.string()});
  CHECK(b.code == kExitUsage);
  CHECK(b.err.find("line 2") != std::string::npos);
}

TEST_CASE("family emits dense vectors") {
  Run cut = run({"family", "cut", "--n", "5", "--a", "1,2"});
  CHECK(cut.code == kExitOk);
  CHECK(cut.out == "n 5\n2 -1 -1 -1 -1 2 -1 -1 2 2\n");
  Run trivial = run({"family", "trivial", "--n", "6", "--edge", "2,3"});
  CHECK(trivial.out == "n 6\n0 0 1 0 0 0 0 0 0 0 0 0 0 0 0\n");
  CHECK(run({"family", "trivial", "--n", "5"}).code == kExitUsage);
  Run bs = run({"family", "binary-star", "--n", "8", "--a", "3,4,5", "--b", "6,7,8"});
  CHECK(bs.code == kExitOk);
  CHECK(run({"family", "binary-star", "--n", "7", "--a", "3,4", "--b", "5,6,7"}).code == kExitUsage);
  Run c4 = run({"family", "c4k", "--m", "0"});
  CHECK(c4.out.rfind("n 12\n", 0) == 0);
}

TEST_CASE("lift applies the vertex split and reports hypothesis failures") {
  auto in = temp_file("lift_in.txt", "n 6\n0 0 0 0 0 0 0 0 0 0 0 0 0 0 1\n1 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n");
  auto out = temp_file("lift_out.txt");
  Run r = run({"lift", "--input", in.string(), "--output", out.string()});
  CHECK(r.code == kExitNegative);
  CHECK(r.err.find("no triangle") != std::string::npos);
  CHECK(slurp(out) == "n 7\n1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n");
}

TEST_CASE("sample and metric-check") {
  Run s = run({"sample", "--n", "6", "--count", "5"});
  CHECK(s.code == kExitOk);
  CHECK(s.out.rfind("5 verified facets", 0) == 0);
  std::string thirds = "n 4\n";
  for (auto e : {"1 2", "1 3", "2 3", "1 4", "2 4", "3 4"}) thirds += std::string(e) + " 2/3\n";
  auto d = temp_file("thirds.txt", thirds);
  Run m = run({"metric-check", "--graph", d.string()});
  CHECK(m.code == kExitOk);
  CHECK(m.out.find("tight perimeter inequalities: 4") != std::string::npos);
  auto over = temp_file("over.txt", "n 3\n1 2 1\n1 3 1\n2 3 1\n");
  Run o = run({"metric-check", "--graph", over.string()});
  CHECK(o.code == kExitNegative);
  CHECK(o.out.find("d(1,2) + d(1,3) + d(2,3) <= 2 violated by 1") != std::string::npos);
}
