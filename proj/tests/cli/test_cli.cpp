#include "doctest.h"
#include "oracles.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rigidity_cli/commands.hpp"

using rigidity::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rigidity");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rigidity_cli_" + name);
}

}  // namespace

TEST_CASE("intersection on the L-origami refutes constancy") {
  const auto csv = temp("L.csv");
  const auto r = invoke({"intersection", oracle::data_path("origamis/L.json"), "--samples", "360", "--out", csv.string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["constant_half_refuted"] == true);
  CHECK(j["max"].get<double>() == doctest::Approx(3.0));
  CHECK(j["min"].get<double>() < 1e-9);
  CHECK(j["mass"] == 3);
  const auto text = read(csv);
  CHECK(text.rfind("theta,value\n0,3\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 361);
}

TEST_CASE("intersection on the torus") {
  const auto r = invoke({"intersection", oracle::data_path("origamis/torus.json")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["max"].get<double>() == doctest::Approx(1.0));
  CHECK(j["min"].get<double>() < 1e-9);
}

TEST_CASE("intersection input errors exit 1") {
  CHECK(invoke({"intersection", oracle::data_path("origamis/L.json"), "--samples", "4"}).code == 1);
  CHECK(invoke({"intersection", oracle::data_path("origamis/L.json"), "--tolerance", "0"}).code == 1);
  CHECK(invoke({"intersection", "/nonexistent.json"}).code == 1);
  CHECK(invoke({"intersection"}).code == 1);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"bogus"}).code == 1);
}

TEST_CASE("horocycle reports log 2 and 1/2") {
  const auto r = invoke({"horocycle"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["distance"].get<double>() - std::log(2.0)) < 1e-9);
  CHECK(std::abs(j["intersection"].get<double>() - 0.5) < 1e-9);
  const auto t = invoke({"horocycle", "--theta-twist", "1.3"});
  CHECK(nlohmann::json::parse(t.out)["distance"] == j["distance"]);
}

TEST_CASE("horocycle tolerance below the root finder accuracy exits 2") {
  const auto r = invoke({"horocycle", "--tolerance", "1e-15"});
  CHECK(r.code == 2);
  CHECK(r.err.find("exceeds tolerance") != std::string::npos);
}

TEST_CASE("smoothness commands") {
  const auto diag = invoke({"smoothness", oracle::data_path("paths/diagonal.json")});
  REQUIRE(diag.code == 0);
  auto j = nlohmann::json::parse(diag.out);
  CHECK(j["K"] == 1);
  CHECK(j["agreement"] == true);

  const auto sq = invoke({"smoothness", oracle::data_path("polynomials/sqrt_branch.json")});
  REQUIRE(sq.code == 0);
  j = nlohmann::json::parse(sq.out);
  CHECK(j["puiseux_K"] == 2);
  CHECK(j["monodromy_K"] == 2);

  const auto hit = invoke({"smoothness", oracle::data_path("paths/boundary_hit.json")});
  CHECK(hit.code == 1);
  CHECK(hit.err.find("leaves the ball") != std::string::npos);
}

TEST_CASE("a monodromy circle enclosing another branch point is an input error") {
  CHECK(invoke({"smoothness", oracle::data_path("polynomials/double_eigenvalue.json"), "--radius", "1.5"}).code == 1);
}

TEST_CASE("outputs are byte-identical across runs") {
  const auto a = temp("a.csv");
  const auto b = temp("b.csv");
  const auto ra = invoke({"intersection", oracle::data_path("origamis/staircase5.json"), "--out", a.string()});
  const auto rb = invoke({"intersection", oracle::data_path("origamis/staircase5.json"), "--out", b.string()});
  CHECK(ra.out == rb.out);
  CHECK(read(a) == read(b));
  CHECK(invoke({"smoothness", oracle::data_path("paths/jordan.json")}).out ==
        invoke({"smoothness", oracle::data_path("paths/jordan.json")}).out);
}
