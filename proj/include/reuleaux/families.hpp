#pragma once

#include <string>
#include <vector>

#include "reuleaux/extremal.hpp"

namespace reuleaux {

enum class FamilyKind { Pyramid, Elongated, Trapezohedron };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Pyramid;
  int n = 3;
  /// Scale of the lower ring; elongated pyramids only.
  double t = 0.5;

  /// Throws ParameterError if `n` (and `t`) are out of range for `kind`.
  void validate() const;
  std::string name() const;
};

FamilyKind parse_family_kind(const std::string& name);

/// Regular n-gon of diameter one in z = 0 plus an apex at unit distance from every base vertex.
/// n odd, n >= 3. Base vertex j (1-based) sits at angle 2 pi j / n.
std::vector<Vec3> pyramid_points(int n);

/// Pyramid base, a second ring t * base - alpha e_3 and an apex beta e_3. n odd >= 3, t in (0,1).
std::vector<Vec3> elongated_points(int n, double t);

/// Regular n-gon of circumradius 1/2, the same ring turned by pi/n and lifted by sin(pi/2n), and
/// an apex at (sqrt 3 / 2) e_3. n even >= 2.
std::vector<Vec3> trapezohedron_points(int n);

std::vector<Vec3> family_points(const FamilySpec& spec);
PointSet family_point_set(const FamilySpec& spec, double eps = 1e-9);

/// Number of diametric pairs the construction has: 2n for pyramids, 4n otherwise.
int family_pair_count(const FamilySpec& spec);

/// Closed-form perimeter of the Reuleaux pyramid over the regular n-gon (n odd >= 3).
double pyramid_perimeter_closed(int n);

/// Closed-form volume of the Reuleaux pyramid over the regular n-gon (n odd >= 3).
double pyramid_volume_closed(int n);

}  // namespace reuleaux
