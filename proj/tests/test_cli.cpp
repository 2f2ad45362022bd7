#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "reuleaux/errors.hpp"
#include "reuleaux/io.hpp"
#include "reuleaux/mesh.hpp"
#include "support.hpp"

using namespace reuleaux;
using nlohmann::json;
using std::numbers::pi;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "reuleaux");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("reuleaux_cli_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = temp_path(name);
  std::ofstream(path) << content;
  return path;
}

std::string data(const std::string& name) { return testing::data_path(name + ".txt").string(); }

std::string tetra_file() {
  std::ostringstream os;
  write_points(os, testing::tetrahedron(), PointFormat::Text);
  return write_temp("tetra.txt", os.str());
}

}  // namespace

TEST_CASE("generate prints the pair summary") {
  const auto out = temp_path("r3.txt");
  auto r = run({"generate", "pyramid", "--n", "3", "--out", out});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 points, 6 diametric pairs") != std::string::npos);
  CHECK(read_points(out).size() == 4);

  r = run({"generate", "elongated", "--n", "5", "--t", "0.75", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.err.find("11 points, 20 diametric pairs") != std::string::npos);
  CHECK(parse_points(r.out).size() == 11);

  r = run({"generate", "trapezohedron", "--n", "3"});
  CHECK(r.code == cli::kParse);
  CHECK(r.err.find("even") != std::string::npos);
  std::filesystem::remove(out);
}

TEST_CASE("analyze reports the irregular examples") {
  const std::pair<const char*, std::pair<double, double>> cases[] = {
      {"irregular10", {3.0006801203477895, 0.4499825760002685}},
      {"irregular12", {3.0036684374206386, 0.45172374549885497}}};
  for (const auto& [name, pv] : cases) {
    const auto r = run({"analyze", data(name), "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["extremality"]["extremal"] == true);
    CHECK(std::abs(j["metrics"]["perimeter"].get<double>() - pv.first) <= 1e-9);
    CHECK(std::abs(j["metrics"]["volume"].get<double>() - pv.second) <= 1e-9);
    const std::size_t m = j["input"]["m"];
    CHECK(j["structure"]["edges"].size() == 2 * m - 2);
    CHECK(j["structure"]["dual_pairs"].size() == m - 1);
    CHECK(j["structure"]["euler_characteristic"] == 2);
    CHECK(j["structure"]["faces"][0]["cycle"].size() >= 2);
  }
}

TEST_CASE("text report") {
  const auto r = run({"analyze", tetra_file()});
  CHECK(r.code == 0);
  CHECK(r.out.find("perimeter: 2.975471716584") != std::string::npos);
}

TEST_CASE("non-extremal input") {
  auto pts = testing::tetrahedron();
  const Vec3 centroid = (pts[0] + pts[1] + pts[2] + pts[3]) / 4.0;
  pts[3] = pts[3] + normalized(centroid - pts[3]) * 0.1;
  std::ostringstream os;
  write_points(os, pts, PointFormat::Text);
  const auto path = write_temp("perturbed.txt", os.str());
  const auto r = run({"analyze", path, "--json"});
  CHECK(r.code == cli::kNonExtremal);
  const auto j = json::parse(r.out);
  CHECK(j["extremality"]["extremal"] == false);
  CHECK_FALSE(j.contains("metrics"));
  CHECK(run({"check", path}).code == cli::kNonExtremal);
  CHECK(run({"check", tetra_file()}).code == 0);

  // Pushing a point outward violates the diameter instead.
  pts = testing::tetrahedron();
  pts[3] = pts[3] - normalized(centroid - pts[3]) * 0.1;
  std::ostringstream os2;
  write_points(os2, pts, PointFormat::Text);
  const auto r2 = run({"analyze", write_temp("outward.txt", os2.str())});
  CHECK(r2.code == cli::kNonExtremal);
  CHECK(r2.err.find("diameter") != std::string::npos);
}

TEST_CASE("meissner command") {
  auto r = run({"meissner", tetra_file(), "--default-plan", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["meissner"]["perimeter"].get<double>() ==
        doctest::Approx(pi * (2 - std::sqrt(3.0) / 2 * testing::acos13())).epsilon(1e-13));
  CHECK(j["meissner"]["volume"].get<double>() ==
        doctest::Approx(pi * (2.0 / 3 - std::sqrt(3.0) / 4 * testing::acos13())).epsilon(1e-13));
  CHECK(j["meissner"]["edges"].size() == 3);

  const auto plan = write_temp("plan8a.json", R"({"smooth": [[1,2],[1,3],[1,5],[1,6],[2,4],[2,5],[2,7]]})");
  r = run({"meissner", data("irregular8a"), "--smooth", plan, "--json"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(std::abs(j["meissner"]["perimeter"].get<double>() - testing::kMeissner8aP) <= 1e-9);
  CHECK(std::abs(j["meissner"]["volume"].get<double>() - testing::kMeissner8aV) <= 1e-9);

  const auto dup = write_temp("dup.json", R"({"smooth": [[1,2],[1,2],[1,3],[1,5],[1,6],[2,4],[2,5],[2,7]]})");
  CHECK(run({"meissner", data("irregular8a"), "--smooth", dup}).code == cli::kPlan);
  const auto bad = write_temp("bad.json", R"({"smooth": [[1,2]}")");
  CHECK(run({"meissner", data("irregular8a"), "--smooth", bad}).code == cli::kParse);
  CHECK(run({"meissner", data("irregular8a")}).code == cli::kParse);
}

TEST_CASE("oracle command") {
  const auto r = run({"oracle", tetra_file(), "--samples", "10000000", "--seed", "1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["samples"] == 10000000);
  CHECK(j["seed"] == 1);
  CHECK(std::abs(j["estimate"].get<double>() - 0.4221577331158264) <= 3 * j["std_error"].get<double>());
}

TEST_CASE("mesh command") {
  const auto d4 = temp_path("d4.txt");
  REQUIRE(run({"generate", "trapezohedron", "--n", "4", "--out", d4}).code == 0);
  const auto obj = temp_path("d4.obj");
  auto r = run({"mesh", d4, "--out", obj, "--subdiv", "96"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(mesh_area(read_obj(obj)) - 3.0260193893230074) < 1e-3);

  const auto mobj = temp_path("meissner.obj");
  r = run({"mesh", tetra_file(), "--out", mobj, "--subdiv", "32", "--meissner", "default"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["boundary_edges"] == 0);
  const auto back = read_obj(mobj);
  CHECK(boundary_edge_count(weld(back, 1e-7)) == 0);
  CHECK(is_closed(back));

  CHECK(run({"mesh", d4, "--out", temp_path("x.stl")}).code == cli::kParse);
  CHECK(run({"mesh", d4, "--out", obj, "--subdiv", "1"}).code == cli::kParse);
  for (const auto& p : {d4, obj, mobj}) std::filesystem::remove(p);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = run({"analyze", data("irregular8b"), "--json"});
  const auto b = run({"analyze", data("irregular8b"), "--json"});
  CHECK(a.out == b.out);
  const auto c = run({"oracle", data("irregular8b"), "--samples", "300000", "--seed", "5", "--threads", "1"});
  const auto d = run({"oracle", data("irregular8b"), "--samples", "300000", "--seed", "5", "--threads", "3"});
  CHECK(c.out == d.out);
}

TEST_CASE("eps from the environment and the flag") {
  ::setenv("REULEAUX_EPS", "0.9", 1);
  CHECK(run({"analyze", data("irregular8a")}).code == cli::kNonExtremal);
  CHECK(run({"analyze", data("irregular8a"), "--eps", "1e-9"}).code == 0);
  ::setenv("REULEAUX_EPS", "nonsense", 1);
  CHECK(run({"analyze", data("irregular8a")}).code == cli::kParse);
  ::unsetenv("REULEAUX_EPS");
}

TEST_CASE("usage and I/O errors") {
  CHECK(run({}).code == cli::kParse);
  CHECK(run({"analyze"}).code == cli::kParse);
  CHECK(run({"analyze", "/nonexistent.txt"}).code == cli::kParse);
  CHECK(run({"frobnicate"}).code == cli::kParse);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"analyze", write_temp("garbage.txt", "1 2 three\n")}).code == cli::kParse);
}

TEST_CASE("dump formatting") {
  const json j = {{"b", 0.1}, {"a", 1}, {"c", {1.0 / 3.0}}};
  CHECK(cli::dump(j) == "{\n  \"a\": 1,\n  \"b\": 0.10000000000000001,\n  \"c\": [0.33333333333333331]\n}");
  CHECK_THROWS_AS(cli::dump(json{{"x", NAN}}), NumericalError);
}
