#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "togliatti/cli.hpp"
#include "togliatti/io.hpp"

using namespace togliatti;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& cache = "") {
  std::ostringstream out, err;
  int code = run_cli(args, out, err, cache);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string canon(const std::string& text) { return canonical_form(parse_inline_ideal(text)).to_string(); }

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("togliatti-test-" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("analyze the smooth (2,5) exception") {
  auto r = run({"analyze", "x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^2*x2^2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["togliatti"]["is_togliatti"] == true);
  CHECK(j["togliatti"]["is_minimal"] == true);
  CHECK(j["smoothness"]["is_smooth"] == true);
  CHECK(j["stability"]["verdict"] == "stable");
  CHECK(j["tags"]["smooth_minimal"] == true);
  CHECK(j["tool_version"] == std::string(kToolVersion));
  CHECK_FALSE(j.contains("timing"));
}

TEST_CASE("analyze the cubic surface") {
  auto r = run({"analyze", "x0^3,x1^3,x2^3,x0*x1*x2", "--checks", "togliatti,smoothness"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["tags"]["minimal"] == true);
  CHECK(j["smoothness"]["is_smooth"] == true);
  CHECK_FALSE(j.contains("wlp"));
  CHECK_FALSE(j.contains("stability"));
}

TEST_CASE("analyze reports the input in both forms") {
  auto j = nlohmann::json::parse(run({"analyze", "x1^3,x0^3,x2^3,x1^2*x2", "--checks", "wlp"}).out);
  CHECK(j["input"]["canonical"]["inline"] == canon("x1^3,x0^3,x2^3,x1^2*x2"));
  CHECK(j["input"]["as_given"]["inline"] == parse_inline_ideal("x1^3,x0^3,x2^3,x1^2*x2").to_string());
}

TEST_CASE("input errors exit with code 2") {
  auto a = run({"analyze", "x0^3,x1^3,x0*x1*x2"});
  CHECK(a.code == 2);
  CHECK(a.err.find("not artinian") != std::string::npos);
  auto b = run({"analyze", "x0^3,x1^3,x2^3,x0*q1"});
  CHECK(b.code == 2);
  CHECK(b.err.find("line 1, column 19") != std::string::npos);
  CHECK(run({"analyze", "x0^3,x1^3,x2^3", "--checks", "colour"}).code == 2);
  CHECK(run({"enumerate", "--n", "2", "--d", "4"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("analyze reads ideal files") {
  auto dir = scratch_dir("file");
  std::filesystem::create_directories(dir);
  auto f = dir / "ideal.json";
  std::ofstream(f) << R"({"n": 2, "d": 3, "generators": ["x0^3", "x1^3", "x2^3", "x0*x1*x2"]})";
  auto r = run({"analyze", f.string(), "--checks", "togliatti"});
  CHECK(r.code == 0);
  std::ofstream(f) << "{\n  \"n\": 2,\n  \"d\": 3 3\n}";
  auto bad = run({"analyze", f.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);
}

TEST_CASE("enumerate (2,5) mu=6 smooth minimal") {
  auto r = run({"enumerate", "--n", "2", "--d", "5", "--mu", "6", "--filter", "minimal,smooth,nontrivial"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{canon("x0^5,x1^5,x2^5,x0^3*x1*x2,x0^2*x1^2*x2,x0*x1^3*x2"),
                                                 canon("x0^5,x1^5,x2^5,x0^3*x1*x2,x0*x1^3*x2,x0*x1*x2^3"),
                                                 canon("x0^5,x1^5,x2^5,x0^2*x1^2*x2,x0^2*x1*x2^2,x0*x1^2*x2^2")});
}

TEST_CASE("enumerate (2,6) mu=6 has no smooth minimal non-trivial system") {
  auto r = run({"enumerate", "--n", "2", "--d", "6", "--mu", "6", "--filter", "minimal,smooth,nontrivial"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("enumerate (2,7) mu=6 finds the listed orbits and one more") {
  auto r = run({"enumerate", "--n", "2", "--d", "7", "--mu", "6", "--filter", "minimal,smooth,nontrivial"});
  REQUIRE(r.code == 0);
  auto found = lines(r.out);
  std::sort(found.begin(), found.end());
  std::vector<std::string> want{canon("x0^7,x1^7,x2^7,x0^3*x1^3*x2,x0^3*x1*x2^3,x0*x1^3*x2^3"),
                                canon("x0^7,x1^7,x2^7,x0^5*x1*x2,x0*x1^5*x2,x0*x1*x2^5"),
                                canon("x0^7,x1^7,x2^7,x0*x1*x2^5,x0^3*x1^3*x2,x0^2*x1^2*x2^3"),
                                canon("x0^7,x1^7,x2^7,x0^4*x1^2*x2,x0^2*x1*x2^4,x0*x1^4*x2^2")};
  std::sort(want.begin(), want.end());
  CHECK(found == want);
}

TEST_CASE("enumerate output formats and determinism") {
  std::vector<std::string> base{"enumerate", "--n", "3", "--d", "4", "--mu", "7", "--filter", "minimal"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  CHECK(run(one).out == run(four).out);
  auto csv = base;
  csv.insert(csv.end(), {"--format", "csv"});
  CHECK(lines(run(csv).out).front() == "index,generators,ideal");
  auto json = base;
  json.insert(json.end(), {"--format", "json"});
  CHECK(nlohmann::json::parse(run(json).out).size() == lines(run(base).out).size());
}

TEST_CASE("budget refusal exits with code 3") {
  auto r = run({"enumerate", "--n", "3", "--d", "5", "--mu", "9", "--budget", "1000"});
  CHECK(r.code == 3);
  CHECK(r.err.find("2598960") != std::string::npos);
}

TEST_CASE("survey and bounds") {
  auto s = run({"survey", "--n", "2", "--d", "5", "--mu", "5-6"});
  REQUIRE(s.code == 0);
  CHECK(lines(s.out).size() == 3);
  auto b = run({"bounds", "--n", "3", "--d", "4"});
  REQUIRE(b.code == 0);
  auto j = nlohmann::json::parse(b.out);
  CHECK(j["mu"]["value"] == 7);
  CHECK(j["rho"]["value"] == 15);
  CHECK(j["mu"]["status"] == "paper-asserted");
}

TEST_CASE("reproduce: unknown target, list, cache") {
  auto u = run({"reproduce", "no-such-target"});
  CHECK(u.code == 4);
  CHECK(u.err.find("certificate-hyperquadric") != std::string::npos);
  auto l = run({"reproduce", "--list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("stability-thm") != std::string::npos);

  auto dir = scratch_dir("cache");
  auto first = run({"reproduce", "certificate-hyperquadric"}, dir.string());
  CHECK(first.code == 0);
  CHECK(first.out.find("PASS  certificate-hyperquadric") != std::string::npos);
  auto cache_file = dir / "togliatti-cache.jsonl";
  REQUIRE(std::filesystem::exists(cache_file));
  const auto size = std::filesystem::file_size(cache_file);
  auto second = run({"reproduce", "certificate-hyperquadric"}, dir.string());
  CHECK(second.out == first.out);
  CHECK(std::filesystem::file_size(cache_file) == size);
}

TEST_CASE("--out writes to a file") {
  auto dir = scratch_dir("out");
  std::filesystem::create_directories(dir);
  auto path = (dir / "report.json").string();
  auto r = run({"analyze", "x0^3,x1^3,x2^3,x0*x1*x2", "--checks", "wlp", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in)["wlp"]["has_wlp"] == false);
}
