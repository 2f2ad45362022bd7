#include "reuleaux/metrics.hpp"

#include <numbers>
#include <sstream>
#include <string>

#include "reuleaux/errors.hpp"

namespace reuleaux {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double guarded_angle(const Vec3& u, const Vec3& v, const char* what) {
  try {
    return angle_between(u, v);
  } catch (const DomainError&) {
    throw GeometryError(std::string(what) + ": degenerate configuration");
  }
}

// x_j . (-1/2 integral of the boundary conormal) for one arc.
Vec3 conormal_term(const Vec3& a_i, const Vec3& a_next, const Vec3& b, const Vec3& xj, double psi) {
  const Vec3 d = b - xj;
  const double len = norm(d);
  const double s = 0.5 * len;
  return cross(d, a_next - a_i) * 0.25 + d * (psi * (1.0 - s * s) / (2.0 * len));
}

}  // namespace

double psi_angle(const Vec3& a_i, const Vec3& a_next, const Vec3& b, const Vec3& xj) {
  const Vec3 c = midpoint(b, xj);
  if (a_i == a_next) return 0.0;
  return guarded_angle(a_i - c, a_next - c, "psi_angle");
}

double theta_angle(const Vec3& b_i, const Vec3& b_next, const Vec3& a_shared, const Vec3& xj) {
  const Vec3 incoming = cross(b_i - xj, a_shared - midpoint(b_i, xj));
  const Vec3 outgoing = cross(b_next - xj, a_shared - midpoint(b_next, xj));
  if (b_i == b_next) return 0.0;
  return guarded_angle(incoming, outgoing, "theta_angle");
}

FaceMetrics face_area(const ReuleauxStructure& s, std::size_t j, const Tolerances& tol) {
  const FaceCycle& face = s.faces.at(j);
  const Vec3& xj = s.point(j);
  const std::size_t n = face.size();
  FaceMetrics fm;
  fm.face_of = j;
  double area = kTwoPi;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    const Vec3& a = s.point(face.cycle[i]);
    const Vec3& a_next = s.point(face.cycle[next]);
    const Vec3& b = s.point(face.adjacent[i]);
    const Vec3& b_next = s.point(face.adjacent[next]);

    const double psi = psi_angle(a, a_next, b, xj);
    if (std::abs(psi - face.arcs[i].sweep) > tol.geometric) {
      std::ostringstream os;
      os.precision(17);
      os << "face " << j + 1 << ": arc sweep " << face.arcs[i].sweep << " disagrees with psi "
         << psi;
      throw NumericalError(os.str());
    }
    const double kg = 0.5 * norm(b - xj) * psi;
    const double theta = theta_angle(b, b_next, a_next, xj);
    fm.psi.push_back(psi);
    fm.theta.push_back(theta);
    fm.kg_integrals.push_back(kg);
    area -= kg + theta;
  }
  if (!(area > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "face " << j + 1 << ": Gauss-Bonnet area " << area << " is not positive";
    throw NumericalError(os.str());
  }
  fm.area = area;
  return fm;
}

double perimeter(const ReuleauxStructure& s, const Tolerances& tol) {
  double p = 0.0;
  for (std::size_t j = 0; j < s.faces.size(); ++j) p += face_area(s, j, tol).area;
  return p;
}

double volume(const ReuleauxStructure& s, const Tolerances& tol) { return body_metrics(s, tol).volume; }

BodyMetrics body_metrics(const ReuleauxStructure& s, const Tolerances& tol) {
  BodyMetrics bm;
  double flux = 0.0;
  for (std::size_t j = 0; j < s.faces.size(); ++j) {
    FaceMetrics fm = face_area(s, j, tol);
    const FaceCycle& face = s.faces[j];
    const Vec3& xj = s.point(j);
    Vec3 normal_integral;
    for (std::size_t i = 0; i < face.size(); ++i) {
      normal_integral += conormal_term(s.point(face.cycle[i]), s.point(face.cycle[(i + 1) % face.size()]),
                                       s.point(face.adjacent[i]), xj, fm.psi[i]);
    }
    flux += dot(xj, normal_integral);
    bm.perimeter += fm.area;
    bm.per_face.push_back(std::move(fm));
  }
  bm.volume = bm.perimeter / 3.0 + flux / 3.0;
  if (!(bm.volume > 0.0 && bm.volume < bm.perimeter / 3.0 + 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "volume " << bm.volume << " is outside the admissible range for perimeter " << bm.perimeter;
    throw NumericalError(os.str());
  }
  return bm;
}

}  // namespace reuleaux
