#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "reuleaux/extremal.hpp"
#include "reuleaux/geom.hpp"

namespace reuleaux {

/// Boundary cycle of the face on the sphere about x_{face_of}.
///
/// `cycle[i]` and `cycle[i+1]` (indices mod N) are joined by `arcs[i]`, which lies on the
/// circle where the spheres about x_{face_of} and x_{adjacent[i]} meet. Cycles are positively
/// oriented: seen from outside the sphere, the face interior is to the left of each arc.
struct FaceCycle {
  std::size_t face_of = 0;
  std::vector<std::size_t> cycle;
  std::vector<std::size_t> adjacent;
  std::vector<Arc> arcs;
  /// Edge record id of each arc.
  std::vector<std::size_t> edge_ids;

  std::size_t size() const noexcept { return cycle.size(); }
};

struct EdgeRecord {
  /// Vertex indices joined by the edge, sorted.
  std::array<std::size_t, 2> endpoints{};
  /// Centers whose spheres contain the edge, sorted.
  std::array<std::size_t, 2> supports{};
  /// Id of the edge whose endpoints are this edge's supports.
  std::size_t dual = 0;
  /// The arc as traversed by face `supports[0]`; it starts at vertex `arc_from`.
  Arc arc;
  std::size_t arc_from = 0;
};

struct ReuleauxStructure {
  PointSet point_set;
  DiameterGraph graph;
  /// faces[j] is the face opposite x_j.
  std::vector<FaceCycle> faces;
  std::vector<EdgeRecord> edges;
  /// Unordered edge-id pairs, each listed once with the smaller id first.
  std::vector<std::array<std::size_t, 2>> dual_pairs;
  std::vector<std::size_t> dangling;

  const Vec3& point(std::size_t i) const { return point_set[i]; }
  std::size_t size() const noexcept { return point_set.size(); }
};

/// Reconstructs the boundary of B(X) for an extremal set.
///
/// The vertices of face j are the diameter-neighbors of x_j, ordered by azimuth about their mean
/// direction. Each consecutive pair is then given the unique adjacent center whose circle carries
/// a positively turning arc between them that stays inside B(X).
///
/// Throws NonExtremalError for non-extremal input and StructuralError if a cycle or the duality
/// cannot be reconstructed.
ReuleauxStructure build_structure(const PointSet& ps, const Tolerances& tol = {});

const FaceCycle& face_cycle(const ReuleauxStructure& s, std::size_t j);

/// b_{i,j}: the adjacent center of arc i on face j.
std::size_t adjacent_vertex(const ReuleauxStructure& s, std::size_t j, std::size_t i);

/// Finds the edge joining vertices `a` and `b` (any order). Returns size_t(-1) if none and
/// throws StructuralError when more than one edge joins them.
std::size_t find_edge(const ReuleauxStructure& s, std::size_t a, std::size_t b);

/// True iff p lies within 1 + slack of every center.
bool in_body(std::span<const Vec3> centers, const Vec3& p, double slack);

/// Checks that the interior of face j is on the left of every arc, probing a short step to either
/// side of each arc midpoint.
bool is_positively_oriented(const ReuleauxStructure& s, std::size_t j);

}  // namespace reuleaux
