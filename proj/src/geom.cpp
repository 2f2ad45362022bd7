#include "reuleaux/geom.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "reuleaux/errors.hpp"

namespace reuleaux {

DiameterViolation::DiameterViolation(std::size_t i, std::size_t j, double dist)
    : Error([&] {
        std::ostringstream os;
        os.precision(17);
        os << "diameter violation: points " << i + 1 << " and " << j + 1 << " are at distance "
           << dist;
        return os.str();
      }()),
      first_(i),
      second_(j),
      distance_(dist) {}

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero-length vector");
  return a / n;
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

double safe_acos(double c) noexcept { return std::acos(std::clamp(c, -1.0, 1.0)); }
double safe_asin(double s) noexcept { return std::asin(std::clamp(s, -1.0, 1.0)); }

double angle_between(const Vec3& a, const Vec3& b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (!(na > 0.0) || !(nb > 0.0)) throw DomainError("angle_between: zero-length argument");
  // Same value as acos(a.b / |a||b|), without the loss of precision near 0 and pi.
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

double signed_rotation_angle(const Vec3& from, const Vec3& to, const Vec3& unit_axis) {
  const Vec3 f = from - unit_axis * dot(from, unit_axis);
  const Vec3 t = to - unit_axis * dot(to, unit_axis);
  if (!(norm2(f) > 0.0) || !(norm2(t) > 0.0))
    throw DomainError("signed_rotation_angle: vector parallel to axis");
  double angle = std::atan2(dot(unit_axis, cross(f, t)), dot(f, t));
  if (angle < 0.0) angle += 2.0 * std::numbers::pi;
  return angle;
}

Vec3 rotate_about(const Vec3& v, const Vec3& unit_axis, double angle) noexcept {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return v * c + cross(unit_axis, v) * s + unit_axis * (dot(unit_axis, v) * (1.0 - c));
}

Circle3 sphere_pair_circle(const Vec3& xj, const Vec3& xk) {
  const Vec3 d = xj - xk;
  const double len = norm(d);
  if (!(len > 0.0)) throw GeometryError("sphere_pair_circle: coincident centers");
  if (!(len < 2.0)) throw GeometryError("sphere_pair_circle: unit spheres do not meet in a circle");
  const double half = 0.5 * len;
  return Circle3{midpoint(xj, xk), std::sqrt(1.0 - half * half), d / len};
}

namespace {

void require_on_circle(const Circle3& c, const Vec3& p, const Tolerances& tol, const char* what) {
  const Vec3 r = p - c.center;
  const double off_plane = std::abs(dot(r, c.axis));
  const double off_radius = std::abs(norm(r) - c.radius);
  if (off_plane > tol.geometric || off_radius > tol.geometric) {
    std::ostringstream os;
    os.precision(3);
    os << "make_arc: " << what << " point is off the circle (plane " << off_plane << ", radius "
       << off_radius << ')';
    throw GeometryError(os.str());
  }
}

}  // namespace

Arc make_arc(const Circle3& circle, const Vec3& start, const Vec3& end, const Tolerances& tol) {
  require_on_circle(circle, start, tol, "start");
  require_on_circle(circle, end, tol, "end");
  const double sweep = signed_rotation_angle(start - circle.center, end - circle.center, circle.axis);
  if (!(sweep > 0.0)) throw GeometryError("make_arc: start and end coincide");
  return Arc{circle, start, sweep};
}

Vec3 arc_point(const Arc& arc, double t) {
  if (!(t >= 0.0 && t <= arc.sweep)) throw DomainError("arc_point: parameter outside [0, sweep]");
  const Vec3 r = arc.start - arc.circle.center;
  return arc.circle.center + r * std::cos(t) + cross(arc.circle.axis, r) * std::sin(t);
}

Vec3 arc_end(const Arc& arc) { return arc_point(arc, arc.sweep); }

Vec3 great_arc_point(const Vec3& center, const Vec3& from, const Vec3& to, double fraction) {
  if (fraction == 0.0) return from;
  if (fraction == 1.0) return to;
  const Vec3 u = from - center;
  const double radius = norm(u);
  const Vec3 du = u / radius;
  const Vec3 dv = normalized(to - center);
  const double omega = safe_acos(dot(du, dv));
  if (omega < 1e-15) return from;
  if (std::numbers::pi - omega < 1e-12)
    throw GeometryError("great_arc_point: antipodal endpoints have no unique geodesic");
  const double s = std::sin(omega);
  const Vec3 dir = du * (std::sin((1.0 - fraction) * omega) / s) + dv * (std::sin(fraction * omega) / s);
  return center + dir * radius;
}

}  // namespace reuleaux
