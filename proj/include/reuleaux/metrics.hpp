#pragma once

#include <cstddef>
#include <vector>

#include "reuleaux/structure.hpp"

namespace reuleaux {

struct FaceMetrics {
  std::size_t face_of = 0;
  double area = 0.0;
  /// Sweep of each boundary arc, computed from vertex positions.
  std::vector<double> psi;
  /// Turning angle at the end of each arc (at cycle[i+1]).
  std::vector<double> theta;
  /// Geodesic curvature integral |b - x_j|/2 * psi of each arc.
  std::vector<double> kg_integrals;
};

struct BodyMetrics {
  double perimeter = 0.0;
  double volume = 0.0;
  std::vector<FaceMetrics> per_face;
};

/// Angle subtended at the circle center (b + x_j)/2 by the arc from a_i to a_next.
double psi_angle(const Vec3& a_i, const Vec3& a_next, const Vec3& b, const Vec3& xj);

/// Exterior angle at `a_shared` between the arc on circle (x_j, b_i) arriving there and the arc
/// on circle (x_j, b_next) leaving it. Tangents are (b - x_j) x (a - (b + x_j)/2).
double theta_angle(const Vec3& b_i, const Vec3& b_next, const Vec3& a_shared, const Vec3& xj);

/// Gauss-Bonnet area of face j: 2pi - sum(kg integral + theta). Throws NumericalError if the
/// result is not strictly positive, or if an arc sweep disagrees with its psi by more than
/// `tol.geometric`.
FaceMetrics face_area(const ReuleauxStructure& s, std::size_t j, const Tolerances& tol = {});

double perimeter(const ReuleauxStructure& s, const Tolerances& tol = {});

/// Divergence-theorem volume, evaluated in the input frame:
/// V = P/3 + (1/3) sum_j x_j . sum_i [ (b - x_j) x (a_{i+1} - a_i) / 4
///                                      + psi (1 - |b - x_j|^2/4) / (2|b - x_j|) (b - x_j) ].
double volume(const ReuleauxStructure& s, const Tolerances& tol = {});

/// Face areas, perimeter and volume in one pass (faces summed in index order).
BodyMetrics body_metrics(const ReuleauxStructure& s, const Tolerances& tol = {});

}  // namespace reuleaux
