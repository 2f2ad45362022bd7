#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "reuleaux/meissner.hpp"
#include "reuleaux/structure.hpp"

namespace reuleaux {

enum class PatchKind : std::uint8_t { Face, Sliver, Spindle };

/// What a triangle discretizes: the face opposite x_index, or the sliver/spindle of edge `index`.
struct Provenance {
  PatchKind kind = PatchKind::Face;
  std::size_t index = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<Provenance> provenance;

  std::size_t add_vertex(const Vec3& v) {
    vertices.push_back(v);
    return vertices.size() - 1;
  }
};

/// Triangulates every face of B(X) on its sphere.
///
/// Each boundary arc is split into `subdiv` equal-angle pieces, shared by the two faces that meet
/// along it. Each face is filled by `subdiv` rings interpolated along great circles from the
/// normalized mean of its boundary directions. Vertex layout: the m centers first, then the
/// interior samples of every edge in edge-id order, then per face its center point followed by
/// the interior rings. For this mesh that makes
///   m + (2m - 2)(subdiv - 1) + sum_j [1 + (subdiv - 1) N_j subdiv]
/// vertices. Triangles face outward. Throws DomainError for subdiv < 2.
TriangleMesh tessellate_reuleaux(const ReuleauxStructure& s, int subdiv);

/// Triangulates the Meissner body of `plan`: faces are clipped along the great-circle arcs that
/// bound the slivers of each smoothed edge, and a spindle patch (rotation angle x arc parameter)
/// fills each gap. Closed by construction, since neighboring patches share boundary vertices.
TriangleMesh tessellate_meissner(const SmoothingPlan& plan, int subdiv);

/// The sliver of `edge` in the face opposite `center` (one of the edge's supports), as a strip
/// between the edge arc and the great-circle arc joining its endpoints.
TriangleMesh tessellate_sliver(const ReuleauxStructure& s, std::size_t edge, std::size_t center,
                               int subdiv);

/// The spindle patch of `edge` alone.
TriangleMesh tessellate_spindle(const ReuleauxStructure& s, std::size_t edge, int subdiv);

/// Sphere of the given radius from a subdivided icosahedron (20 * 4^levels triangles).
TriangleMesh icosphere(const Vec3& center, double radius, int levels);

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) noexcept;
double mesh_area(const TriangleMesh& m);

/// (1/6) |sum det(v0, v1, v2)|. Throws TopologyError if the mesh is not closed.
double mesh_volume(const TriangleMesh& m);

/// Undirected edges used by exactly one triangle.
std::size_t boundary_edge_count(const TriangleMesh& m);

/// Every edge shared by exactly two triangles that traverse it in opposite directions.
bool is_closed(const TriangleMesh& m);

/// Merges vertices closer than `tol` and drops triangles that collapse.
TriangleMesh weld(const TriangleMesh& m, double tol);

void export_obj(const TriangleMesh& m, const std::filesystem::path& path);
void export_ply(const TriangleMesh& m, const std::filesystem::path& path);
/// Reads `v` and `f` records; polygon faces are fanned into triangles.
TriangleMesh read_obj(const std::filesystem::path& path);

}  // namespace reuleaux
