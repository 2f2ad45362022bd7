#include "reuleaux/families.hpp"

#include <cmath>
#include <numbers>

#include "reuleaux/errors.hpp"

namespace reuleaux {

namespace {

constexpr double kPi = std::numbers::pi;

void require_odd(int n, const char* family) {
  if (n < 3 || n % 2 == 0)
    throw ParameterError(std::string(family) + " needs an odd n >= 3, got " + std::to_string(n));
}

}  // namespace

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::Pyramid:
      require_odd(n, "pyramid");
      break;
    case FamilyKind::Elongated:
      require_odd(n, "elongated pyramid");
      if (!(t > 0.0 && t < 1.0))
        throw ParameterError("elongated pyramid needs t in (0, 1), got " + std::to_string(t));
      break;
    case FamilyKind::Trapezohedron:
      if (n < 2 || n % 2 != 0)
        throw ParameterError("trapezohedron needs an even n >= 2, got " + std::to_string(n));
      break;
  }
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::Pyramid:
      return "pyramid";
    case FamilyKind::Elongated:
      return "elongated";
    case FamilyKind::Trapezohedron:
      return "trapezohedron";
  }
  return {};
}

FamilyKind parse_family_kind(const std::string& name) {
  if (name == "pyramid") return FamilyKind::Pyramid;
  if (name == "elongated") return FamilyKind::Elongated;
  if (name == "trapezohedron") return FamilyKind::Trapezohedron;
  throw ParameterError("unknown family '" + name + "'");
}

std::vector<Vec3> pyramid_points(int n) {
  require_odd(n, "pyramid");
  const double scale = 1.0 / (2.0 * std::cos(kPi / (2.0 * n)));
  std::vector<Vec3> pts;
  for (int j = 1; j <= n; ++j) {
    const double a = 2.0 * kPi * j / n;
    pts.push_back({scale * std::cos(a), scale * std::sin(a), 0.0});
  }
  pts.push_back({0.0, 0.0, std::sqrt(1.0 - scale * scale)});
  return pts;
}

std::vector<Vec3> elongated_points(int n, double t) {
  FamilySpec{FamilyKind::Elongated, n, t}.validate();
  const double denom = std::pow(2.0 * std::cos(kPi / (2.0 * n)), 2);
  const double alpha = std::sqrt(1.0 - (t * t + 1.0 + 2.0 * t * std::cos(kPi / n)) / denom);
  const double beta = std::sqrt(1.0 - t * t / denom) - alpha;
  std::vector<Vec3> pts = pyramid_points(n);
  pts.pop_back();
  for (int j = 0; j < n; ++j) pts.push_back(pts[j] * t - Vec3{0.0, 0.0, alpha});
  pts.push_back({0.0, 0.0, beta});
  return pts;
}

std::vector<Vec3> trapezohedron_points(int n) {
  FamilySpec{FamilyKind::Trapezohedron, n, 0.0}.validate();
  std::vector<Vec3> pts;
  for (int j = 1; j <= n; ++j) {
    const double a = 2.0 * kPi * j / n;
    pts.push_back({0.5 * std::cos(a), 0.5 * std::sin(a), 0.0});
  }
  const double c = std::cos(kPi / n);
  const double s = std::sin(kPi / n);
  const double lift = std::sin(kPi / (2.0 * n));
  for (int j = 0; j < n; ++j) {
    const Vec3& p = pts[j];
    pts.push_back({c * p.x - s * p.y, s * p.x + c * p.y, lift});
  }
  pts.push_back({0.0, 0.0, std::sqrt(3.0) / 2.0});
  return pts;
}

std::vector<Vec3> family_points(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::Pyramid:
      return pyramid_points(spec.n);
    case FamilyKind::Elongated:
      return elongated_points(spec.n, spec.t);
    case FamilyKind::Trapezohedron:
      return trapezohedron_points(spec.n);
  }
  return {};
}

PointSet family_point_set(const FamilySpec& spec, double eps) { return PointSet(family_points(spec), eps); }

int family_pair_count(const FamilySpec& spec) {
  spec.validate();
  return spec.kind == FamilyKind::Pyramid ? 2 * spec.n : 4 * spec.n;
}

// The two closed forms below are written out term by term and share nothing with the general
// face/volume evaluation, so agreement between the two is a real check.

double pyramid_perimeter_closed(int n) {
  require_odd(n, "pyramid");
  const double c1 = std::cos(kPi / n);
  const double sh = std::sin(kPi / (2.0 * n));
  const double th = std::tan(kPi / (2.0 * n));
  const double sec2 = 1.0 / std::pow(std::cos(kPi / (2.0 * n)), 2);
  const double bracket = 2.0 * std::acos((4.0 * c1 - 1.0) / 3.0) +
                         2.0 * sh * std::acos(c1 / (c1 + 1.0)) +
                         2.0 * std::acos(th / std::sqrt(3.0)) +
                         std::acos(5.0 - 4.0 * c1 - 2.0 * sec2);
  return 2.0 * kPi * (n + 1) - n * bracket;
}

double pyramid_volume_closed(int n) {
  require_odd(n, "pyramid");
  const double c1 = std::cos(kPi / n);
  const double s1 = std::sin(kPi / n);
  const double ch = std::cos(kPi / (2.0 * n));
  const double sh = std::sin(kPi / (2.0 * n));
  const double th = std::tan(kPi / (2.0 * n));
  const double sec2 = 1.0 / (ch * ch);
  const double bracket = 19.0 / 8.0 * std::acos((4.0 * c1 - 1.0) / 3.0) +
                         2.0 * std::acos(th / std::sqrt(3.0)) +
                         (0.5 * s1 * ch + 2.0 * sh) * std::acos(c1 / (c1 + 1.0)) +
                         std::acos(5.0 - 4.0 * c1 - 2.0 * sec2) -
                         0.25 * s1 * std::sqrt(4.0 - sec2);
  return 2.0 * kPi / 3.0 * (n + 1) - n / 3.0 * bracket;
}

}  // namespace reuleaux
