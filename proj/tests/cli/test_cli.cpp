#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "thetakit/errors.hpp"
#include "thetakit_cli/cli.hpp"

using thetakit::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("r2 5 prints 8") {
  const auto r = call({"r2", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5  8      8") != std::string::npos);
  const auto j = thetakit::cli::Json::parse(call({"--format", "json", "r2", "5"}).out);
  CHECK(j["r2"] == 8);
}

TEST_CASE("relation 3 prints lhs 6 = rhs 6") {
  const auto r = call({"relation", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lhs 6 = rhs 6") != std::string::npos);
}

TEST_CASE("relation over a range reports squares without failing") {
  const auto r = call({"--format", "csv", "relation", "--upto", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4,10,61/6,no,yes (not asserted)") != std::string::npos);
}

TEST_CASE("rationals are serialized as strings") {
  const auto j = thetakit::cli::Json::parse(call({"--format", "json", "hurwitz", "3"}).out);
  CHECK(j["H"] == "1/3");
  const auto m = thetakit::cli::Json::parse(call({"--format", "json", "mass", "8"}).out);
  CHECK(m["mass"] == "1/696729600");
}

TEST_CASE("usage errors exit 2 with the grammar") {
  auto r = call({"--no-such-flag", "r2", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage: thetakit") != std::string::npos);
  r = call({});
  CHECK(r.code == 2);
  r = call({"theta", "--lattice", "e8", "--upto", "-1"});
  CHECK(r.code == 2);
  r = call({"density", "selfdual", "-n", "2", "-q", "4"});
  CHECK(r.code == 2);
  r = call({"heegner", "--d", "20"});
  CHECK(r.code == 2);
  CHECK(r.err.find("148") != std::string::npos);
}

TEST_CASE("help exits 0") { CHECK(call({"--help"}).code == 0); }

TEST_CASE("theta reads a Gram matrix file") {
  const auto path = temp_path("thetakit_gram.json");
  std::ofstream(path) << R"({"gram": [[2, 1], [1, 2]]})";
  const auto j = thetakit::cli::Json::parse(call({"--format", "json", "theta", "--lattice", path, "--upto", "2"}).out);
  CHECK(j["rows"][1]["r"] == 6);
  std::ofstream(path) << "[[2, 0], [0, 2]]";
  const auto k = thetakit::cli::Json::parse(call({"--format", "json", "theta", "--lattice", path, "--upto", "1"}).out);
  CHECK(k["rows"][1]["r"] == 4);
  std::filesystem::remove(path);
}

TEST_CASE("heegner rows and the summary") {
  const auto r = call({"--format", "json", "heegner", "--d", "3,7,67"});
  CHECK(r.code == 0);
  const auto j = thetakit::cli::Json::parse(r.out);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["n_d"] == "-6");
  CHECK(j["rows"][2]["c_d"] == -6);
}

TEST_CASE("budget exhaustion is a failure, not a usage error") {
  const auto r = call({"--budget", "10", "theta", "--lattice", "e8", "--upto", "3"});
  CHECK(r.code == 1);
}

TEST_CASE("environment fallback and flag precedence") {
  setenv("THETAKIT_HEEGNER_TERMS", "300", 1);
  const auto env = call({"--format", "json", "heegner", "--d", "3"});
  const auto flag = call({"--format", "json", "--terms", "400", "heegner", "--d", "3"});
  const auto starved = call({"--terms", "7", "heegner", "--d", "3"});
  unsetenv("THETAKIT_HEEGNER_TERMS");
  CHECK(thetakit::cli::Json::parse(env.out)["terms"] == 300);
  CHECK(thetakit::cli::Json::parse(flag.out)["terms"] == 400);
  CHECK(starved.code == 1);
  CHECK(starved.err.find("not an integer") != std::string::npos);
}

TEST_CASE("verify-all is deterministic and passes") {
  const auto a = call({"--format", "json", "verify-all", "--no-timing"});
  const auto b = call({"--format", "json", "verify-all", "--no-timing"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = thetakit::cli::Json::parse(a.out);
  CHECK(j["summary"]["failed"] == 0);
  for (const auto& suite : j["suites"])
    for (const auto& c : suite["cases"]) {
      const std::string p = c["provenance"];
      CHECK((p == "paper" || p == "trivial" || p == "derived"));
    }
}

TEST_CASE("plots") {
  const auto path = temp_path("thetakit_plot.svg");
  CHECK(call({"plot", "--series", "jacobi", "--upto", "50", "--out", path}).code == 0);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), {});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(call({"bridge", "--check", "e8", "--upto", "6", "--plot", path}).code == 0);
  CHECK(std::filesystem::exists(path));
  std::filesystem::remove(path);
  CHECK(call({"plot", "--out", "/nonexistent-dir/x.svg"}).code == 1);
  CHECK_THROWS_AS(thetakit::cli::emit_plot({}, path, "empty"), thetakit::DomainError);
  CHECK_THROWS_AS(thetakit::cli::emit_plot({{"s", {}}}, path, "empty"), thetakit::DomainError);
}
