#include <doctest.h>

#include <cmath>

#include "reuleaux/errors.hpp"
#include "reuleaux/extremal.hpp"
#include "reuleaux/families.hpp"
#include "support.hpp"

using namespace reuleaux;

namespace {

std::size_t brute_force_pairs(const std::vector<Vec3>& pts, double eps) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Vec3 d = pts[i] - pts[j];
      if (std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z) >= 1.0 - eps) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("tetrahedron has six diametric pairs and is extremal") {
  const PointSet ps(testing::tetrahedron());
  const auto g = build_diameter_graph(ps);
  CHECK(g.pair_count == 6);
  CHECK(is_extremal(g, ps.size()));
  CHECK(dangling_vertices(g).empty());
}

TEST_CASE("distance beyond the diameter is rejected with the pair") {
  auto pts = testing::tetrahedron();
  pts[3] = pts[0] + normalized(pts[3] - pts[0]) * 1.1;
  const PointSet ps(pts);
  try {
    build_diameter_graph(ps);
    FAIL("expected a diameter violation");
  } catch (const DiameterViolation& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 3);
    CHECK(e.distance() == doctest::Approx(1.1));
  }
}

TEST_CASE("pair counts match brute force on the irregular sets") {
  const std::pair<const char*, std::size_t> cases[] = {
      {"irregular8a", 14}, {"irregular8b", 14}, {"irregular10", 18}, {"irregular12", 22}};
  for (const auto& [name, expected] : cases) {
    const auto pts = testing::irregular(name);
    const PointSet ps(pts);
    const auto g = build_diameter_graph(ps);
    CHECK(g.pair_count == brute_force_pairs(pts, 1e-9));
    CHECK(g.pair_count == expected);
    CHECK(is_extremal(g, ps.size()));
  }
}

TEST_CASE("adjacency is symmetric and sorted") {
  const PointSet ps(testing::irregular("irregular10"));
  const auto g = build_diameter_graph(ps);
  std::size_t degree_sum = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(std::is_sorted(g.adjacency[i].begin(), g.adjacency[i].end()));
    degree_sum += g.degree(i);
    for (auto j : g.adjacency[i]) CHECK(g.adjacent(j, i));
  }
  CHECK(degree_sum == 2 * g.pair_count);
}

TEST_CASE("square pyramid with four pairs is not extremal") {
  const double h = std::sqrt(0.63);
  const PointSet ps({{0.5, 0, 0}, {0, 0.5, 0}, {-0.5, 0, 0}, {0, -0.5, 0}, {-0.1, -0.1, h}});
  const auto g = build_diameter_graph(ps);
  CHECK(g.pair_count == 4);
  CHECK_FALSE(is_extremal(g, ps.size()));
}

TEST_CASE("pair count above the bound is an inconsistency") {
  // A huge eps merges every distance into the diametric class.
  const PointSet ps(testing::irregular("irregular8a"), 0.9);
  const auto g = build_diameter_graph(ps);
  CHECK(g.pair_count == 28);
  CHECK_THROWS_AS(is_extremal(g, ps.size()), InconsistencyError);
}

TEST_CASE("pyramid sets are extremal") {
  for (int n : {3, 5, 7, 9, 11}) {
    const PointSet ps(pyramid_points(n));
    const auto g = build_diameter_graph(ps);
    CHECK(g.pair_count == static_cast<std::size_t>(2 * n));
    CHECK(is_extremal(g, ps.size()));
  }
}

TEST_CASE("dangling vertices") {
  SUBCASE("none on the 5-pyramid") {
    const PointSet ps(pyramid_points(5));
    const auto g = build_diameter_graph(ps);
    CHECK(dangling_vertices(g).empty());
    CHECK(g.degree(5) == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(g.degree(i) == 3);
  }
  SUBCASE("the fifth point of the 2-trapezohedron has degree two") {
    const PointSet ps(trapezohedron_points(2));
    const auto g = build_diameter_graph(ps);
    CHECK(is_extremal(g, ps.size()));
    const auto d = dangling_vertices(g);
    REQUIRE(d.size() == 1);
    CHECK(g.degree(d[0]) == 2);
  }
  SUBCASE("tetrahedron plus a point on an edge arc") {
    // Midpoint of the arc joining x_3 and x_4 on the circle of the pair (x_1, x_2).
    const auto tet = testing::tetrahedron();
    const Circle3 c = sphere_pair_circle(tet[0], tet[1]);
    const Vec3 mid = c.center + normalized(midpoint(tet[2], tet[3]) - c.center) * c.radius;
    auto pts = tet;
    pts.push_back(mid);
    const PointSet ps(pts);
    const auto g = build_diameter_graph(ps);
    CHECK(g.pair_count == 8);
    CHECK(is_extremal(g, ps.size()));
    CHECK(dangling_vertices(g) == std::vector<std::size_t>{4});
  }
}

TEST_CASE("point set preconditions") {
  CHECK_THROWS_AS(PointSet({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), DomainError);
  CHECK_THROWS_AS(PointSet({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, NAN}}), DomainError);
  CHECK_THROWS_AS(PointSet(testing::tetrahedron(), -1.0), DomainError);
}

TEST_CASE("diameter finds the farthest pair") {
  const auto d = diameter(std::vector<Vec3>{{0, 0, 0}, {0.3, 0, 0}, {0, 0, 0.9}, {0.1, 0.1, 0.1}});
  CHECK(d.first == 1);
  CHECK(d.second == 2);
  CHECK(d.distance == doctest::Approx(std::sqrt(0.9)));
}
