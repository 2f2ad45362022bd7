#pragma once

#include <cmath>
#include <ostream>

namespace reuleaux {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) noexcept {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) noexcept {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) noexcept {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) noexcept { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) noexcept { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) noexcept { return a *= (1.0 / s); }

constexpr double dot(const Vec3& a, const Vec3& b) noexcept {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm2(const Vec3& a) noexcept { return dot(a, a); }
inline double norm(const Vec3& a) noexcept { return std::sqrt(norm2(a)); }
inline double distance(const Vec3& a, const Vec3& b) noexcept { return norm(a - b); }
constexpr Vec3 midpoint(const Vec3& a, const Vec3& b) noexcept { return (a + b) * 0.5; }

inline bool is_finite(const Vec3& a) noexcept {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Unit vector along `a`; throws DomainError for the zero vector.
Vec3 normalized(const Vec3& a);

std::ostream& operator<<(std::ostream& os, const Vec3& v);

/// Tolerances shared by the geometric routines. Passed explicitly; there is no global instance.
struct Tolerances {
  /// Points-on-circle and similar incidence checks.
  double geometric = 1e-9;
  /// Absolute band around 1 for classifying diametric pairs.
  double diametric = 1e-9;
  /// Slack allowed when testing that a boundary point lies inside every ball.
  double membership = 1e-9;
  /// Vertex weld distance for meshes.
  double weld = 1e-7;
};

/// acos clamped to [-1, 1].
double safe_acos(double c) noexcept;
double safe_asin(double s) noexcept;

/// The angle between two nonzero vectors, in [0, pi].
double angle_between(const Vec3& a, const Vec3& b);

/// Angle of the rotation about `unit_axis` that carries `from` onto the direction of `to`,
/// in [0, 2pi). Both vectors are taken perpendicular to the axis.
double signed_rotation_angle(const Vec3& from, const Vec3& to, const Vec3& unit_axis);

/// Rodrigues rotation of `v` about `unit_axis` by `angle` (right-hand rule).
Vec3 rotate_about(const Vec3& v, const Vec3& unit_axis, double angle) noexcept;

struct Circle3 {
  Vec3 center;
  double radius = 0.0;
  /// Unit normal of the circle's plane. Positive sweeps turn counterclockwise about it.
  Vec3 axis;
};

/// The circle where the unit spheres about `xj` and `xk` meet.
/// The axis points from `xk` to `xj`. Throws GeometryError unless 0 < |xj - xk| < 2.
Circle3 sphere_pair_circle(const Vec3& xj, const Vec3& xk);

/// A circular arc swept counterclockwise about `circle.axis` from `start`.
struct Arc {
  Circle3 circle;
  Vec3 start;
  /// Radians in (0, 2pi).
  double sweep = 0.0;
};

/// Builds the arc that starts at `start` and turns positively about the circle axis until it
/// reaches `end`. Both points must lie on the circle within `tol.geometric`.
Arc make_arc(const Circle3& circle, const Vec3& start, const Vec3& end, const Tolerances& tol = {});

/// gamma(t) = c + cos t (start - c) + sin t axis x (start - c), for t in [0, sweep].
Vec3 arc_point(const Arc& arc, double t);

/// The point at `fraction` in [0, 1] of the sweep.
inline Vec3 arc_point_at_fraction(const Arc& arc, double fraction) {
  return arc_point(arc, fraction * arc.sweep);
}

Vec3 arc_end(const Arc& arc);

/// Point at `fraction` of the way along the minor great-circle arc from `from` to `to` on the
/// sphere of radius |from - center| about `center`. The endpoints must not be antipodal.
Vec3 great_arc_point(const Vec3& center, const Vec3& from, const Vec3& to, double fraction);

}  // namespace reuleaux
