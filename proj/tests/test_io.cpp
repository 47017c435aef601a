#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthograph/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace orthograph;

namespace {

Mat diag2(double a, double b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_file = "cli_out.tmp";
  const std::string cmd =
      std::string(ORTHOGRAPH_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

void write_element(const std::string& path, const DirectSumElement& e) {
  save_json(element_to_json(e), path);
}

}  // namespace

TEST_CASE("element documents round-trip exactly") {
  AlgebraSignature sig({1, 2});
  Mat m(2, 2);
  m << Complex(0.1234567890123, -3.14159265358979), Complex(2.0, 0.0),
      Complex(-1e-9, 1e17), Complex(0.0, -0.5);
  DirectSumElement e(sig, {Mat::Constant(1, 1, Complex(1.5, -2.25)), m});
  const Json j = Json::parse(element_to_json(e).dump());
  const DirectSumElement back = element_from_json(j);
  REQUIRE(back.signature == e.signature);
  for (size_t c = 0; c < e.coords.size(); ++c) CHECK(back.coords[c] == e.coords[c]);
}

TEST_CASE("malformed element documents are rejected with positions") {
  CHECK_THROWS_AS(element_from_json(Json{{"signature", {2}}}), InputError);
  CHECK_THROWS_AS(element_from_json(Json{{"signature", {0}}, {"coords", Json::array()}}),
                  InputError);
  CHECK_THROWS_AS(
      element_from_json(Json{{"signature", {2}},
                             {"coords", {{{{1.0, 0.0}}, {{1.0, 0.0}}}}}}),
      InputError);
  Json bad_entry = Json{{"signature", {1}}, {"coords", {{{"x"}}}}};
  CHECK_THROWS_AS(element_from_json(bad_entry), InputError);
}

TEST_CASE("signature strings parse and print") {
  CHECK(parse_signature("1+2+3").sizes == std::vector<int>{1, 2, 3});
  CHECK(signature_string(AlgebraSignature({1, 2, 3})) == "1+2+3");
  CHECK_THROWS_AS(parse_signature(""), InputError);
  CHECK_THROWS_AS(parse_signature("2+x"), InputError);
  CHECK_THROWS_AS(parse_signature("2+-1"), InputError);
}

TEST_CASE("run reports embed tolerances and seed") {
  RunReport rep;
  rep.command = "check";
  rep.seed = 77;
  const Json j = rep.to_json();
  CHECK(j["tolerances"]["eps_rank"] == ToleranceConfig{}.eps_rank);
  CHECK(j["tolerances"]["eps_orth"] == ToleranceConfig{}.eps_orth);
  CHECK(j["seed"] == 77);
  CHECK(j["command"] == "check");
}

TEST_CASE("cli check: adjacency, non-adjacency, uncertainty codes") {
  AlgebraSignature sig({2, 2});
  write_element("a.tmp.json", DirectSumElement(sig, {Mat::Identity(2, 2), diag2(1, 0)}));
  write_element("b.tmp.json", DirectSumElement(sig, {diag2(1, 0), Mat::Identity(2, 2)}));
  const RunResult adj = run_cli("check a.tmp.json b.tmp.json");
  CHECK(adj.exit_code == 0);
  CHECK(adj.output.find("adjacent: yes") != std::string::npos);

  write_element("c.tmp.json",
                DirectSumElement(AlgebraSignature({1, 2}),
                                 {Mat::Constant(1, 1, Complex(1.0)), diag2(2, 0)}));
  write_element("d.tmp.json",
                DirectSumElement(AlgebraSignature({1, 2}),
                                 {Mat::Constant(1, 1, Complex(1.0)), Mat::Ones(2, 2)}));
  CHECK(run_cli("check c.tmp.json d.tmp.json").exit_code == 1);
}

TEST_CASE("cli check: input errors exit with 64") {
  write_file("trunc.tmp.json", "{\"signature\": [2], \"coords\": [[[");
  CHECK(run_cli("check trunc.tmp.json trunc.tmp.json").exit_code == 64);
  write_element("e2.tmp.json", DirectSumElement(AlgebraSignature({2}), {diag2(1, 0)}));
  write_element("e3.tmp.json", DirectSumElement(AlgebraSignature({3}),
                                                {Mat::Identity(3, 3)}));
  CHECK(run_cli("check e2.tmp.json e3.tmp.json").exit_code == 64);
  CHECK(run_cli("check missing.tmp.json e2.tmp.json").exit_code == 64);
}

TEST_CASE("cli witness: paths, max-len and isolated vertices") {
  AlgebraSignature sig({1, 2});
  write_element("w1.tmp.json",
                DirectSumElement(sig, {Mat::Constant(1, 1, Complex(1.0)), diag2(2, 0)}));
  write_element("w2.tmp.json",
                DirectSumElement(sig, {Mat::Constant(1, 1, Complex(1.0)), Mat::Ones(2, 2)}));
  const RunResult ok = run_cli("witness w1.tmp.json w2.tmp.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("path length: 4") != std::string::npos);
  CHECK(run_cli("witness w1.tmp.json w2.tmp.json --max-len 3").exit_code == 3);

  write_element("iso.tmp.json",
                DirectSumElement(sig, {Mat::Constant(1, 1, Complex(1.0)),
                                       Mat::Identity(2, 2)}));
  CHECK(run_cli("witness iso.tmp.json w2.tmp.json").exit_code == 65);

  // adjacent pair: length-1 path
  AlgebraSignature two({2});
  write_element("p.tmp.json", DirectSumElement(two, {diag2(1, 0)}));
  write_element("q.tmp.json", DirectSumElement(two, {diag2(0, 1)}));
  const RunResult adj = run_cli("witness p.tmp.json q.tmp.json");
  CHECK(adj.exit_code == 0);
  CHECK(adj.output.find("path length: 1") != std::string::npos);
}

namespace {

// Identical up to the wall-clock field, which is the only nondeterministic part.
std::string strip_wall_time(const std::string& s) {
  std::stringstream in(s), out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("wall_time_ms") == std::string::npos) out << line << "\n";
  return out.str();
}

}  // namespace

TEST_CASE("cli sample is deterministic per seed") {
  const RunResult r1 = run_cli("sample 2+2 --strategy random-singular --count 15 --seed 7 --json");
  const RunResult r2 = run_cli("sample 2+2 --strategy random-singular --count 15 --seed 7 --json");
  CHECK(r1.exit_code == 0);
  CHECK(strip_wall_time(r1.output) == strip_wall_time(r2.output));
  CHECK(run_cli("sample 2+x --count 5").exit_code == 64);
}

TEST_CASE("cli diameter prints the classification value") {
  const RunResult r = run_cli("diameter 1+2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("= 4") != std::string::npos);
}

TEST_CASE("cli distance reports inf for pairs outside the sample") {
  AlgebraSignature sig({2});
  write_element("da.tmp.json", DirectSumElement(sig, {diag2(1, 0)}));
  write_element("db.tmp.json", DirectSumElement(sig, {diag2(0, 1)}));
  const RunResult present =
      run_cli("distance da.tmp.json db.tmp.json --count 40 --seed 3");
  CHECK(present.exit_code == 0);
  CHECK(present.output.find("distance: 1") != std::string::npos);
  const RunResult absent = run_cli(
      "distance da.tmp.json db.tmp.json --count 4 --seed 3 --sample-only "
      "--strategy random-singular");
  CHECK(absent.exit_code == 1);
  CHECK(absent.output.find("inf") != std::string::npos);
}

TEST_CASE("cli reproduce: unknown case exits with 64") {
  CHECK(run_cli("reproduce no-such-case").exit_code == 64);
}

TEST_CASE("cli reproduce: fast golden cases exit cleanly") {
  for (const char* name : {"intro-example", "final-table", "c-m2-distance4"})
    CHECK(run_cli(std::string("reproduce ") + name).exit_code == 0);
}

TEST_CASE("cli writes machine reports via --out") {
  AlgebraSignature sig({2});
  write_element("o1.tmp.json", DirectSumElement(sig, {diag2(1, 0)}));
  write_element("o2.tmp.json", DirectSumElement(sig, {diag2(0, 1)}));
  std::remove("report.tmp.json");
  const RunResult r = run_cli("check o1.tmp.json o2.tmp.json --out report.tmp.json");
  CHECK(r.exit_code == 0);
  std::ifstream in("report.tmp.json");
  REQUIRE(in.good());
  const Json rep = Json::parse(in);
  CHECK(rep["command"] == "check");
  CHECK(rep["result"]["adjacent"] == true);
  CHECK(rep["tolerances"].contains("eps_rank"));
}
