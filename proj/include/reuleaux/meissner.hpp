#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "reuleaux/structure.hpp"

namespace reuleaux {

/// One edge per dual pair, chosen for smoothing. Holds a non-owning pointer to the structure it
/// was validated against; the structure must outlive the plan.
class SmoothingPlan {
 public:
  /// Throws PlanError unless `smoothed` covers every dual pair exactly once.
  SmoothingPlan(const ReuleauxStructure& s, std::vector<std::size_t> smoothed);

  const ReuleauxStructure& structure() const noexcept { return *structure_; }
  /// Edge ids, sorted.
  const std::vector<std::size_t>& smoothed() const noexcept { return smoothed_; }
  bool is_smoothed(std::size_t edge) const;

 private:
  const ReuleauxStructure* structure_;
  std::vector<std::size_t> smoothed_;
};

/// Plan from 0-based endpoint pairs. Throws PlanError for pairs that name no edge.
SmoothingPlan plan_from_endpoints(const ReuleauxStructure& s,
                                  const std::vector<std::array<std::size_t, 2>>& pairs);

/// From every dual pair, the edge whose sorted endpoint pair is lexicographically smaller.
SmoothingPlan default_plan(const ReuleauxStructure& s);

/// Surgery data for one smoothed edge e = (b, c) with dual e' = (b', c').
struct SurgeryEdge {
  std::size_t edge = 0;
  double sliver_area = 0.0;
  double spindle_area = 0.0;
  /// Angle at b' between b and c.
  double phi = 0.0;
  /// Sweep of e about (b' + c')/2.
  double varphi = 0.0;
  /// Rotation taking b' to c' about the line through b and c.
  double psi = 0.0;
};

struct SurgeryAreas {
  std::vector<SurgeryEdge> edges;
};

/// Area of the region of the face opposite b' between edge (b, c) and the great-circle arc
/// from b to c on the sphere about b':
///   2 acos( sqrt(1 - |b' - c'|^2/4) sin(varphi) / sin(phi) ) - |c' - b'|/2 varphi.
/// Requires |b-b'| = |b-c'| = |c-b'| = |c-c'| = 1 within `tol.diametric`.
double sliver_area(const Vec3& b, const Vec3& c, const Vec3& b_prime, const Vec3& c_prime,
                   const Tolerances& tol = {});

/// Area of the spindle-torus patch obtained by turning the great-circle arc from b to c on the
/// sphere about b' into the one on the sphere about c':
///   2 psi ( |b - c|/2 - sqrt(1 - |b - c|^2/4) asin(|b - c|/2) ).
double spindle_area(const Vec3& b, const Vec3& c, const Vec3& b_prime, const Vec3& c_prime,
                    const Tolerances& tol = {});

/// Sliver and spindle data for every smoothed edge. Also checks that the midpoint of each
/// bounding geodesic lies in B(X).
SurgeryAreas surgery_areas(const SmoothingPlan& plan, const Tolerances& tol = {});

/// P(M) = P(B(X)) + sum over smoothed edges of (spindle area - 2 sliver area).
double meissner_perimeter(const SmoothingPlan& plan, const Tolerances& tol = {});

/// Constant-width volume from perimeter: V = P/2 - pi/3.
double meissner_volume(double perimeter) noexcept;

}  // namespace reuleaux
