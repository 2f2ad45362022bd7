#include "reuleaux/structure.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "reuleaux/errors.hpp"

namespace reuleaux {

namespace {

using EdgeKey = std::pair<std::array<std::size_t, 2>, std::array<std::size_t, 2>>;

std::array<std::size_t, 2> sorted_pair(std::size_t a, std::size_t b) {
  return a < b ? std::array{a, b} : std::array{b, a};
}

std::string label(std::size_t i) { return std::to_string(i + 1); }

// Unit vector perpendicular to d.
Vec3 any_perpendicular(const Vec3& d) {
  const Vec3 trial = std::abs(d.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  return normalized(cross(d, trial));
}

std::vector<std::size_t> azimuth_order(const PointSet& ps, std::size_t j,
                                       const std::vector<std::size_t>& neighbors) {
  Vec3 mean;
  for (auto k : neighbors) mean += normalized(ps[k] - ps[j]);
  if (!(norm(mean) > 1e-12))
    throw StructuralError("face " + label(j) + ": neighbor directions have no mean direction");
  const Vec3 axis = normalized(mean);
  const Vec3 e1 = any_perpendicular(axis);
  const Vec3 e2 = cross(axis, e1);

  std::vector<std::pair<double, std::size_t>> keyed;
  for (auto k : neighbors) {
    const Vec3 dir = ps[k] - ps[j];
    keyed.emplace_back(std::atan2(dot(dir, e2), dot(dir, e1)), k);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> order;
  for (const auto& [az, k] : keyed) order.push_back(k);
  // Start at the smallest label so the cycle is reproducible.
  std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
  return order;
}

struct ResolvedArc {
  std::size_t adjacent;
  Arc arc;
};

// The adjacent center for the arc from a to a_next on face j, if exactly one candidate works.
std::optional<ResolvedArc> resolve_arc(const PointSet& ps, const DiameterGraph& g, std::size_t j,
                                       std::size_t a, std::size_t a_next, const Tolerances& tol,
                                       std::size_t& survivors) {
  std::vector<std::size_t> common;
  std::set_intersection(g.adjacency[a].begin(), g.adjacency[a].end(), g.adjacency[a_next].begin(),
                        g.adjacency[a_next].end(), std::back_inserter(common));
  std::optional<ResolvedArc> found;
  survivors = 0;
  for (auto b : common) {
    if (b == j) continue;
    Arc arc;
    try {
      // Axis (x_b - x_j)/|x_b - x_j|: positive turns keep the face (inside B(x_b)) on the left.
      arc = make_arc(sphere_pair_circle(ps[b], ps[j]), ps[a], ps[a_next], tol);
    } catch (const GeometryError&) {
      continue;
    }
    bool inside = true;
    for (double f : {0.25, 0.5, 0.75})
      inside = inside && in_body(ps.points(), arc_point_at_fraction(arc, f), tol.membership);
    if (!inside) continue;
    ++survivors;
    found = ResolvedArc{b, arc};
  }
  if (survivors != 1) return std::nullopt;
  return found;
}

std::optional<FaceCycle> resolve_cycle(const PointSet& ps, const DiameterGraph& g, std::size_t j,
                                       const std::vector<std::size_t>& order, const Tolerances& tol,
                                       std::string& failure) {
  FaceCycle face;
  face.face_of = j;
  face.cycle = order;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = order[i];
    const std::size_t a_next = order[(i + 1) % n];
    std::size_t survivors = 0;
    auto r = resolve_arc(ps, g, j, a, a_next, tol, survivors);
    if (!r) {
      failure = "face " + label(j) + ": arc " + label(a) + " -> " + label(a_next) + " has " +
                std::to_string(survivors) + " admissible adjacent vertices";
      return std::nullopt;
    }
    face.adjacent.push_back(r->adjacent);
    face.arcs.push_back(r->arc);
  }
  return face;
}

}  // namespace

bool in_body(std::span<const Vec3> centers, const Vec3& p, double slack) {
  const double r2 = (1.0 + slack) * (1.0 + slack);
  for (const auto& c : centers)
    if (norm2(p - c) > r2) return false;
  return true;
}

ReuleauxStructure build_structure(const PointSet& ps, const Tolerances& tol) {
  ReuleauxStructure s;
  s.point_set = ps;
  s.graph = build_diameter_graph(ps);
  const std::size_t m = ps.size();
  if (!is_extremal(s.graph, m))
    throw NonExtremalError("point set has " + std::to_string(s.graph.pair_count) +
                           " diametric pairs; extremal sets have 2m-2 = " + std::to_string(2 * m - 2));
  s.dangling = dangling_vertices(s.graph);

  std::map<EdgeKey, std::size_t> edge_index;
  std::vector<int> occurrences;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& neighbors = s.graph.adjacency[j];
    if (neighbors.size() < 2)
      throw StructuralError("face " + label(j) + " has fewer than two vertices");
    auto order = azimuth_order(ps, j, neighbors);
    std::string failure;
    auto face = resolve_cycle(ps, s.graph, j, order, tol, failure);
    if (!face) {
      std::reverse(order.begin(), order.end());
      std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
      std::string reversed_failure;
      face = resolve_cycle(ps, s.graph, j, order, tol, reversed_failure);
      if (!face) throw StructuralError(failure);
    }

    const std::size_t n = face->size();
    for (std::size_t i = 0; i < n; ++i) {
      const EdgeKey key{sorted_pair(face->cycle[i], face->cycle[(i + 1) % n]),
                        sorted_pair(j, face->adjacent[i])};
      auto [it, inserted] = edge_index.try_emplace(key, s.edges.size());
      if (inserted) {
        s.edges.push_back(EdgeRecord{key.first, key.second, 0, face->arcs[i], face->cycle[i]});
        occurrences.push_back(0);
      }
      ++occurrences[it->second];
      face->edge_ids.push_back(it->second);
    }
    s.faces.push_back(std::move(*face));
  }

  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const auto& edge = s.edges[e];
    if (occurrences[e] != 2)
      throw StructuralError("edge " + label(edge.endpoints[0]) + "-" + label(edge.endpoints[1]) +
                            " appears in " + std::to_string(occurrences[e]) +
                            " face cycles instead of 2");
  }
  if (s.edges.size() != 2 * m - 2)
    throw StructuralError("reconstructed " + std::to_string(s.edges.size()) +
                          " edges; extremal sets have 2m-2 = " + std::to_string(2 * m - 2));

  for (auto& edge : s.edges) {
    const auto it = edge_index.find(EdgeKey{edge.supports, edge.endpoints});
    if (it == edge_index.end())
      throw StructuralError("edge " + label(edge.endpoints[0]) + "-" + label(edge.endpoints[1]) +
                            " has no dual edge");
    edge.dual = it->second;
  }
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const std::size_t d = s.edges[e].dual;
    if (d == e || s.edges[d].dual != e)
      throw StructuralError("edge duality is not an involution");
    if (e < d) s.dual_pairs.push_back({e, d});
  }
  return s;
}

const FaceCycle& face_cycle(const ReuleauxStructure& s, std::size_t j) { return s.faces.at(j); }

std::size_t adjacent_vertex(const ReuleauxStructure& s, std::size_t j, std::size_t i) {
  return s.faces.at(j).adjacent.at(i);
}

std::size_t find_edge(const ReuleauxStructure& s, std::size_t a, std::size_t b) {
  const auto key = sorted_pair(a, b);
  std::size_t found = static_cast<std::size_t>(-1);
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e].endpoints != key) continue;
    if (found != static_cast<std::size_t>(-1))
      throw StructuralError("more than one edge joins vertices " + label(a) + " and " + label(b));
    found = e;
  }
  return found;
}

bool is_positively_oriented(const ReuleauxStructure& s, std::size_t j) {
  const auto& face = s.faces.at(j);
  const Vec3& xj = s.point(j);
  for (const auto& arc : face.arcs) {
    const Vec3 p = arc_point_at_fraction(arc, 0.5);
    const Vec3 tangent = cross(arc.circle.axis, p - arc.circle.center);
    const Vec3 outward = p - xj;
    const Vec3 left = normalized(cross(outward, tangent));
    const double step = std::min(1e-4, 0.1 * arc.circle.radius * arc.sweep);
    const Vec3 inner = xj + normalized(p + left * step - xj);
    const Vec3 outer = xj + normalized(p - left * step - xj);
    if (!in_body(s.point_set.points(), inner, 1e-12)) return false;
    if (in_body(s.point_set.points(), outer, 1e-12)) return false;
  }
  return true;
}

}  // namespace reuleaux
