#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = gspec::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GSPEC_DATA_DIR) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

nlohmann::json body(const Result& r) { return nlohmann::json::parse(r.out).at("body"); }

}  // namespace

TEST_CASE("check-graph headlines") {
  const auto g = call({"check-graph", data("gcd_graph.mat")});
  CHECK(g.code == 0);
  CHECK(first_line(g.out) == "DGSCertified, d=5");
  CHECK(first_line(call({"check-graph", data("gcd_graph.g6")}).out) == "DGSCertified, d=5");
  CHECK(first_line(call({"check-graph", data("k2.g6")}).out) == "NotControllable");
  CHECK(first_line(call({"check-graph", "-"}, "@\n").out).rfind("DGSCertified", 0) == 0);
}

TEST_CASE("check-graph JSON carries both criteria") {
  const auto r = call({"check-graph", "--json", data("gcd_graph.g6")});
  REQUIRE(r.code == 0);
  const auto b = body(r);
  REQUIRE(b["graphs"].size() == 1);
  const auto& g = b["graphs"][0];
  CHECK(g["headline"] == "DGSCertified, d=5");
  CHECK(g["main"]["verdict"] == "Inconclusive");
  CHECK(g["main2"]["d"] == "5");
  const auto meta = nlohmann::json::parse(r.out).at("metadata");
  CHECK(meta.contains("timestamp"));
  CHECK(meta["command"] == "check-graph");
}

TEST_CASE("check-matrix verdicts") {
  CHECK(first_line(call({"check-matrix", data("squarefree_disc.mat")}).out) == "Certified");
  const auto sq = call({"check-matrix", data("square_disc.mat")});
  CHECK(first_line(sq.out) == "NotCertified (HasSquareFactor(3))");
  CHECK(sq.out.find("3^2") != std::string::npos);
  CHECK(first_line(call({"check-matrix", data("zero3.mat")}).out).rfind("NotCertified", 0) == 0);
  const auto bad = call({"check-matrix", "-"}, "2 2\n0 1\n2 0\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("symmetric") != std::string::npos);
}

TEST_CASE("verify-q reproduces the reference conjugate") {
  const auto r = call({"verify-q", "--json", data("square_disc.mat"), data("square_disc_q.rat")});
  REQUIRE(r.code == 0);
  const auto b = body(r);
  CHECK(b["orthogonal"] == true);
  CHECK(b["level"] == "3");
  CHECK(b["level_primes_divide_disc"] == true);
  std::ifstream f(data("square_disc_b.mat"));
  std::stringstream expected;
  expected << f.rdbuf();
  const auto text = call({"verify-q", data("square_disc.mat"), data("square_disc_q.rat")});
  CHECK(text.out.find(expected.str()) != std::string::npos);

  const auto shear = call({"verify-q", data("snf_example.mat"), data("shear.rat")});
  CHECK(shear.code == 2);  // [[0,2],[3,0]] is not symmetric
  const auto flagged = call({"verify-q", "-", data("shear.rat")}, "2 2\n0 1\n1 0\n");
  CHECK(flagged.code == 0);
  CHECK(flagged.out.find("orthogonal: no") != std::string::npos);
  CHECK(call({"verify-q", data("square_disc.mat"), data("shear.rat")}).code == 2);
}

TEST_CASE("utility commands") {
  CHECK(first_line(call({"disc", data("x2_minus_1.poly")}).out) == "4");
  CHECK(first_line(call({"disc", "--matrix", data("square_disc.mat")}).out) == "192462003613415399327099498029653");
  const auto snf = call({"snf", data("snf_example.mat")});
  CHECK(snf.out.rfind("S:\n2 2\n1 0\n0 6\n", 0) == 0);
  const auto walk = call({"walk", data("k2.g6")});
  CHECK(walk.out.find("det W = 0") != std::string::npos);
  CHECK(call({"disc", "-"}, "1 2\n").code == 2);  // not monic
}

TEST_CASE("samples match the bundled data files") {
  for (auto [name, file] : {std::pair<const char*, const char*>{"squarefree-disc", "squarefree_disc.mat"},
                            {"square-disc", "square_disc.mat"},
                            {"square-disc-q", "square_disc_q.rat"},
                            {"square-disc-b", "square_disc_b.mat"},
                            {"gcd-graph", "gcd_graph.mat"},
                            {"gcd-graph-g6", "gcd_graph.g6"}}) {
    std::ifstream f(data(file));
    std::stringstream expected;
    expected << f.rdbuf();
    CHECK(call({"samples", name}).out == expected.str());
  }
  CHECK(call({"samples", "nope"}).code == 2);
}

TEST_CASE("experiment output is deterministic and appends CSV") {
  const auto dir = std::filesystem::temp_directory_path() / "gspec_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "rows.csv").string();
  std::filesystem::remove(csv);
  const std::vector<std::string> args{"experiment", "--n", "2", "--trials", "100", "--seed", "4", "--json", "--csv", csv};
  const auto a = call(args);
  const auto b = call(args);
  REQUIRE(a.code == 0);
  CHECK(body(a) == body(b));
  CHECK(body(a)["trials"] == 100);
  std::ifstream f(csv);
  std::vector<std::string> lines;
  for (std::string line; std::getline(f, line);) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].rfind("n,trials,count_Fprime", 0) == 0);
  CHECK(lines[1] == lines[2]);
  std::filesystem::remove_all(dir);
}

TEST_CASE("oracle command") {
  const auto r = call({"oracle", "--n", "5", "--json"});
  REQUIRE(r.code == 0);
  const auto b = body(r);
  CHECK(b["graphs"] == 1024);
  CHECK(b["violations"].empty());
  CHECK(call({"oracle", "--n", "7"}).code == 2);
  CHECK(call({"oracle", "--n", "8", "--full7"}).code == 2);
}

TEST_CASE("exit codes for bad input") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"check-graph", "/nonexistent/file"}).code == 2);
  const auto parse = call({"check-graph", "-"}, "A_\nD?\x01\n");
  CHECK(parse.code == 2);
  CHECK(parse.err.find("at byte 5") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}
