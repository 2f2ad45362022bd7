#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "reuleaux/errors.hpp"
#include "reuleaux/families.hpp"
#include "reuleaux/meissner.hpp"
#include "reuleaux/mesh.hpp"
#include "reuleaux/metrics.hpp"
#include "support.hpp"

using namespace reuleaux;
using std::numbers::pi;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("reuleaux_test_" + name);
}

TriangleMesh unit_cube() {
  TriangleMesh m;
  for (int i = 0; i < 8; ++i) m.add_vertex({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
  const std::uint32_t quads[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4},
                                     {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  for (const auto& q : quads) {
    m.triangles.push_back({q[0], q[1], q[2]});
    m.triangles.push_back({q[0], q[2], q[3]});
    m.provenance.resize(m.triangles.size());
  }
  return m;
}

double signed_volume(const TriangleMesh& m) {
  double v = 0.0;
  for (const auto& [a, b, c] : m.triangles) v += dot(m.vertices[a], cross(m.vertices[b], m.vertices[c]));
  return v / 6.0;
}

}  // namespace

TEST_CASE("unit cube") {
  const auto m = unit_cube();
  CHECK(is_closed(m));
  CHECK(mesh_area(m) == doctest::Approx(6.0));
  CHECK(mesh_volume(m) == doctest::Approx(1.0));
  CHECK(signed_volume(m) > 0.0);
}

TEST_CASE("icosphere of radius 1/2 converges to the ball") {
  double prev_area_err = 1.0, prev_vol_err = 1.0;
  for (int level = 1; level <= 5; ++level) {
    const auto m = icosphere({0.3, -0.2, 0.1}, 0.5, level);
    CHECK(m.triangles.size() == 20u << (2 * level));
    REQUIRE(is_closed(m));
    const double area_err = std::abs(mesh_area(m) - pi);
    const double vol_err = std::abs(mesh_volume(m) - pi / 6);
    CHECK(area_err < prev_area_err);
    CHECK(vol_err < prev_vol_err);
    prev_area_err = area_err;
    prev_vol_err = vol_err;
  }
  CHECK(prev_area_err < 2e-3);
}

TEST_CASE("open mesh has no volume") {
  auto m = unit_cube();
  m.triangles.pop_back();
  CHECK_FALSE(is_closed(m));
  CHECK(boundary_edge_count(m) == 3);
  CHECK_THROWS_AS(mesh_volume(m), TopologyError);
}

TEST_CASE("tetrahedron mesh") {
  const auto s = build_structure(PointSet(testing::tetrahedron()));
  const auto bm = body_metrics(s);
  const auto m = tessellate_reuleaux(s, 64);
  REQUIRE(is_closed(m));
  CHECK(std::abs(mesh_area(m) - bm.perimeter) < 1e-3);
  CHECK(std::abs(mesh_volume(m) - bm.volume) < 1e-3);
  CHECK(signed_volume(m) > 0.0);
}

TEST_CASE("vertex count follows the documented layout") {
  for (const auto& pts : {testing::tetrahedron(), pyramid_points(5), testing::irregular("irregular10")}) {
    const auto s = build_structure(PointSet(pts));
    for (int k : {2, 5, 12}) {
      const auto m = tessellate_reuleaux(s, k);
      std::size_t expected = s.size() + s.edges.size() * static_cast<std::size_t>(k - 1);
      for (const auto& f : s.faces) expected += 1 + static_cast<std::size_t>(k - 1) * f.size() * static_cast<std::size_t>(k);
      CHECK(m.vertices.size() == expected);
    }
  }
  CHECK_THROWS_AS(tessellate_reuleaux(build_structure(PointSet(testing::tetrahedron())), 1), DomainError);
}

TEST_CASE("face vertices lie on their sphere") {
  const auto s = build_structure(PointSet(testing::irregular("irregular8b")));
  const auto m = tessellate_reuleaux(s, 16);
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    REQUIRE(m.provenance[t].kind == PatchKind::Face);
    const Vec3& center = s.point(m.provenance[t].index);
    for (auto v : m.triangles[t]) CHECK(std::abs(distance(m.vertices[v], center) - 1.0) <= 1e-7);
  }
}

TEST_CASE("mesh error shrinks as subdiv doubles") {
  const auto s = build_structure(PointSet(pyramid_points(5)));
  const auto bm = body_metrics(s);
  double prev_a = 1.0, prev_v = 1.0;
  for (int k : {6, 12, 24, 48}) {
    const auto m = tessellate_reuleaux(s, k);
    const double ea = std::abs(mesh_area(m) - bm.perimeter);
    const double ev = std::abs(mesh_volume(m) - bm.volume);
    CHECK(ea < prev_a);
    CHECK(ev < prev_v);
    prev_a = ea;
    prev_v = ev;
  }
}

TEST_CASE("R_5 at subdiv 96 matches the table") {
  const auto m = tessellate_reuleaux(build_structure(PointSet(pyramid_points(5))), 96);
  CHECK(std::abs(mesh_area(m) - 2.987479950727929) < 1e-3);
  CHECK(std::abs(mesh_volume(m) - 0.44065107464468123) < 1e-3);
}

TEST_CASE("Meissner tetrahedron mesh") {
  const auto s = build_structure(PointSet(testing::tetrahedron()));
  const auto plan = default_plan(s);
  const auto m = tessellate_meissner(plan, 64);
  REQUIRE(is_closed(m));
  CHECK(boundary_edge_count(weld(m, 1e-7)) == 0);
  const double p = pi * (2 - std::sqrt(3.0) / 2 * testing::acos13());
  CHECK(std::abs(mesh_area(m) - p) < 1e-3);
  CHECK(std::abs(mesh_volume(m) - meissner_volume(p)) < 1e-3);
  std::set<std::size_t> spindles;
  for (const auto& tag : m.provenance)
    if (tag.kind == PatchKind::Spindle) spindles.insert(tag.index);
  CHECK(spindles.size() == s.size() - 1);
  for (const auto& v : m.vertices)
    for (const auto& x : s.point_set.points()) CHECK(distance(v, x) <= 1.0 + 1e-9);
}

TEST_CASE("Meissner mesh with a collapsed digon face stays closed") {
  const auto s = build_structure(PointSet(trapezohedron_points(2)));
  const auto plan = default_plan(s);
  const auto m = tessellate_meissner(plan, 48);
  CHECK(is_closed(m));
  const double p = meissner_perimeter(plan);
  CHECK(std::abs(mesh_area(m) - p) < 1e-3);
  CHECK(std::abs(mesh_volume(m) - meissner_volume(p)) < 1e-3);
}

TEST_CASE("weld merges duplicated vertices") {
  auto m = unit_cube();
  // Give every triangle its own copies of its corners.
  TriangleMesh split;
  for (const auto& [a, b, c] : m.triangles) {
    const auto ia = split.add_vertex(m.vertices[a]);
    const auto ib = split.add_vertex(m.vertices[b] + Vec3{1e-9, 0, 0});
    const auto ic = split.add_vertex(m.vertices[c]);
    split.triangles.push_back({std::uint32_t(ia), std::uint32_t(ib), std::uint32_t(ic)});
    split.provenance.push_back({});
  }
  CHECK_FALSE(is_closed(split));
  const auto w = weld(split, 1e-7);
  CHECK(w.vertices.size() == 8);
  CHECK(is_closed(w));
  CHECK(boundary_edge_count(w) == 0);
  CHECK_THROWS_AS(weld(m, 0.0), DomainError);
}

TEST_CASE("OBJ and PLY export") {
  const auto s = build_structure(PointSet(testing::tetrahedron()));
  const auto m = tessellate_reuleaux(s, 6);
  const auto obj = temp_file("tetra.obj");
  export_obj(m, obj);
  const auto back = read_obj(obj);
  CHECK(back.triangles.size() == m.triangles.size());
  CHECK(back.vertices.size() == m.vertices.size());
  CHECK(back.vertices[17] == m.vertices[17]);
  CHECK(back.triangles[5] == m.triangles[5]);

  const auto ply = temp_file("tetra.ply");
  export_ply(m, ply);
  std::ifstream in(ply);
  std::string first, second;
  std::getline(in, first);
  std::getline(in, second);
  CHECK(first == "ply");
  CHECK(second == "format ascii 1.0");

  const auto empty = temp_file("empty.obj");
  export_obj(TriangleMesh{}, empty);
  CHECK(read_obj(empty).triangles.empty());
  export_ply(TriangleMesh{}, temp_file("empty.ply"));
  std::ifstream eply(temp_file("empty.ply"));
  std::stringstream ss;
  ss << eply.rdbuf();
  CHECK(ss.str().find("element vertex 0") != std::string::npos);
  CHECK(ss.str().find("element face 0") != std::string::npos);

  CHECK_THROWS_AS(export_obj(m, "/nonexistent/dir/x.obj"), IoError);
  for (const auto& p : {obj, ply, empty, temp_file("empty.ply")}) std::filesystem::remove(p);
}

TEST_CASE("read_obj fans polygons and rejects bad indices") {
  const auto path = temp_file("quad.obj");
  {
    std::ofstream out(path);
    out << "# quad\nv 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1/1 2/2 3/3 4/4\n";
  }
  CHECK(read_obj(path).triangles.size() == 2);
  {
    std::ofstream out(path);
    out << "v 0 0 0\nf 1 2 3\n";
  }
  CHECK_THROWS_AS(read_obj(path), ParseError);
  std::filesystem::remove(path);
}
