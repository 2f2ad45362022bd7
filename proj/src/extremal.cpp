#include "reuleaux/extremal.hpp"

#include <algorithm>
#include <string>

#include "reuleaux/errors.hpp"

namespace reuleaux {

PointSet::PointSet(std::vector<Vec3> points, double eps) : points_(std::move(points)), eps_(eps) {
  if (points_.size() < 4)
    throw DomainError("a point set needs at least 4 points, got " + std::to_string(points_.size()));
  if (!(eps_ >= 0.0) || !std::isfinite(eps_)) throw DomainError("eps must be finite and non-negative");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!is_finite(points_[i]))
      throw DomainError("point " + std::to_string(i + 1) + " has a non-finite coordinate");
}

bool DiameterGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& row = adjacency.at(i);
  return std::binary_search(row.begin(), row.end(), j);
}

DiameterGraph build_diameter_graph(const PointSet& ps) {
  const std::size_t m = ps.size();
  DiameterGraph g;
  g.adjacency.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = distance(ps[i], ps[j]);
      if (d > 1.0 + ps.eps()) throw DiameterViolation(i, j, d);
      if (d >= 1.0 - ps.eps()) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
        g.pairs.push_back({i, j, d});
      }
    }
  }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  g.pair_count = g.pairs.size();
  return g;
}

bool is_extremal(const DiameterGraph& g, std::size_t m) {
  const std::size_t bound = 2 * m - 2;
  if (g.pair_count > bound)
    throw InconsistencyError("found " + std::to_string(g.pair_count) +
                             " diametric pairs, above the bound 2m-2 = " + std::to_string(bound) +
                             "; eps is too loose for this input");
  return g.pair_count == bound;
}

std::vector<std::size_t> dangling_vertices(const DiameterGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.adjacency.size(); ++i)
    if (g.adjacency[i].size() == 2) out.push_back(i);
  return out;
}

DiametricPair diameter(std::span<const Vec3> points) {
  DiametricPair best;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = distance(points[i], points[j]);
      if (d > best.distance) best = {i, j, d};
    }
  return best;
}

}  // namespace reuleaux
