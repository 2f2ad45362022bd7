#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "reuleaux/geom.hpp"

namespace reuleaux {

/// A finite set of centers that is meant to have diameter one.
///
/// Points are stored 0-based; every user-facing report prints label = index + 1.
/// `eps` is the absolute band around unit distance used to classify diametric pairs.
class PointSet {
 public:
  PointSet() = default;
  /// Requires at least four finite points and eps >= 0; throws DomainError otherwise.
  explicit PointSet(std::vector<Vec3> points, double eps = 1e-9);

  std::size_t size() const noexcept { return points_.size(); }
  const Vec3& operator[](std::size_t i) const { return points_.at(i); }
  std::span<const Vec3> points() const noexcept { return points_; }
  double eps() const noexcept { return eps_; }

 private:
  std::vector<Vec3> points_;
  double eps_ = 1e-9;
};

struct DiametricPair {
  std::size_t first = 0;
  std::size_t second = 0;
  double distance = 0.0;
};

struct DiameterGraph {
  /// Sorted neighbor lists: j is in adjacency[i] iff |x_i - x_j| >= 1 - eps.
  std::vector<std::vector<std::size_t>> adjacency;
  std::size_t pair_count = 0;
  /// Unordered pairs with first < second, in lexicographic order.
  std::vector<DiametricPair> pairs;

  std::size_t degree(std::size_t i) const { return adjacency.at(i).size(); }
  bool adjacent(std::size_t i, std::size_t j) const;
};

/// Throws DiameterViolation for the first pair (lexicographic) further apart than 1 + eps.
DiameterGraph build_diameter_graph(const PointSet& ps);

/// True iff the set attains 2m - 2 diametric pairs. Throws InconsistencyError above the bound.
bool is_extremal(const DiameterGraph& g, std::size_t m);

/// Points of graph degree exactly two (members of exactly two faces).
std::vector<std::size_t> dangling_vertices(const DiameterGraph& g);

/// Largest pairwise distance and the pair that attains it.
DiametricPair diameter(std::span<const Vec3> points);

}  // namespace reuleaux
