#include "reuleaux/meissner.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>
#include <string>

#include "reuleaux/errors.hpp"
#include "reuleaux/metrics.hpp"

namespace reuleaux {

namespace {

std::string label(std::size_t i) { return std::to_string(i + 1); }

std::string edge_label(const ReuleauxStructure& s, std::size_t e) {
  const auto& ep = s.edges.at(e).endpoints;
  return "(" + label(ep[0]) + "," + label(ep[1]) + ")";
}

void require_dual_distances(const Vec3& b, const Vec3& c, const Vec3& bp, const Vec3& cp,
                            const Tolerances& tol, const char* what) {
  for (const auto& [p, q] : {std::pair{b, bp}, {b, cp}, {c, bp}, {c, cp}}) {
    const double d = distance(p, q);
    if (std::abs(d - 1.0) > tol.diametric) {
      std::ostringstream os;
      os.precision(17);
      os << what << ": endpoints of a dual edge pair must be at unit distance, found " << d;
      throw GeometryError(os.str());
    }
  }
}

}  // namespace

SmoothingPlan::SmoothingPlan(const ReuleauxStructure& s, std::vector<std::size_t> smoothed)
    : structure_(&s), smoothed_(std::move(smoothed)) {
  std::sort(smoothed_.begin(), smoothed_.end());
  for (auto e : smoothed_)
    if (e >= s.edges.size()) throw PlanError("plan names edge id " + std::to_string(e) + " which does not exist");

  std::vector<std::string> problems;
  for (std::size_t k = 0; k < s.dual_pairs.size(); ++k) {
    const auto [e, f] = s.dual_pairs[k];
    const auto hits = std::count(smoothed_.begin(), smoothed_.end(), e) +
                      std::count(smoothed_.begin(), smoothed_.end(), f);
    if (hits == 0)
      problems.push_back("dual pair " + edge_label(s, e) + "/" + edge_label(s, f) + " is not covered");
    else if (hits > 1)
      problems.push_back("dual pair " + edge_label(s, e) + "/" + edge_label(s, f) +
                         " is covered more than once");
  }
  if (!problems.empty()) {
    std::string msg = "invalid smoothing plan:";
    for (const auto& p : problems) msg += " " + p + ";";
    msg.pop_back();
    throw PlanError(msg);
  }
}

bool SmoothingPlan::is_smoothed(std::size_t edge) const {
  return std::binary_search(smoothed_.begin(), smoothed_.end(), edge);
}

SmoothingPlan plan_from_endpoints(const ReuleauxStructure& s,
                                  const std::vector<std::array<std::size_t, 2>>& pairs) {
  std::vector<std::size_t> ids;
  for (const auto& [a, b] : pairs) {
    if (a >= s.size() || b >= s.size())
      throw PlanError("plan names vertex label outside 1.." + std::to_string(s.size()));
    std::size_t e;
    try {
      e = find_edge(s, a, b);
    } catch (const StructuralError& err) {
      throw PlanError(err.what());
    }
    if (e == static_cast<std::size_t>(-1))
      throw PlanError("no edge joins vertices " + label(a) + " and " + label(b));
    ids.push_back(e);
  }
  return SmoothingPlan(s, std::move(ids));
}

SmoothingPlan default_plan(const ReuleauxStructure& s) {
  std::vector<std::size_t> ids;
  for (const auto& [e, f] : s.dual_pairs)
    ids.push_back(s.edges[e].endpoints < s.edges[f].endpoints ? e : f);
  return SmoothingPlan(s, std::move(ids));
}

double sliver_area(const Vec3& b, const Vec3& c, const Vec3& b_prime, const Vec3& c_prime,
                   const Tolerances& tol) {
  require_dual_distances(b, c, b_prime, c_prime, tol, "sliver_area");
  const Vec3 mid = midpoint(b_prime, c_prime);
  const double varphi = angle_between(b - mid, c - mid);
  const double phi = angle_between(b - b_prime, c - b_prime);
  const double half = 0.5 * distance(b_prime, c_prime);
  const double r = std::sqrt(1.0 - half * half);
  return 2.0 * safe_acos(r * std::sin(varphi) / std::sin(phi)) - half * varphi;
}

double spindle_area(const Vec3& b, const Vec3& c, const Vec3& b_prime, const Vec3& c_prime,
                    const Tolerances& tol) {
  require_dual_distances(b, c, b_prime, c_prime, tol, "spindle_area");
  const Vec3 mid = midpoint(b, c);
  const double psi = angle_between(b_prime - mid, c_prime - mid);
  const double a = 0.5 * distance(b, c);
  return 2.0 * psi * (a - std::sqrt(1.0 - a * a) * safe_asin(a));
}

SurgeryAreas surgery_areas(const SmoothingPlan& plan, const Tolerances& tol) {
  const ReuleauxStructure& s = plan.structure();
  SurgeryAreas out;
  for (auto e : plan.smoothed()) {
    const EdgeRecord& edge = s.edges[e];
    const Vec3& b = s.point(edge.endpoints[0]);
    const Vec3& c = s.point(edge.endpoints[1]);
    const Vec3& bp = s.point(edge.supports[0]);
    const Vec3& cp = s.point(edge.supports[1]);

    for (const Vec3* center : {&bp, &cp}) {
      const Vec3 g = great_arc_point(*center, b, c, 0.5);
      if (!in_body(s.point_set.points(), g, tol.membership))
        throw GeometryError("geodesic bounding the sliver of edge " + edge_label(s, e) +
                            " leaves B(X)");
    }

    SurgeryEdge se;
    se.edge = e;
    se.sliver_area = sliver_area(b, c, bp, cp, tol);
    se.spindle_area = spindle_area(b, c, bp, cp, tol);
    se.phi = angle_between(b - bp, c - bp);
    se.varphi = angle_between(b - midpoint(bp, cp), c - midpoint(bp, cp));
    se.psi = angle_between(bp - midpoint(b, c), cp - midpoint(b, c));
    out.edges.push_back(se);
  }
  return out;
}

double meissner_perimeter(const SmoothingPlan& plan, const Tolerances& tol) {
  double p = perimeter(plan.structure(), tol);
  for (const auto& se : surgery_areas(plan, tol).edges) p += se.spindle_area - 2.0 * se.sliver_area;
  return p;
}

double meissner_volume(double perimeter) noexcept { return 0.5 * perimeter - std::numbers::pi / 3.0; }

}  // namespace reuleaux
