#include "core/euler_frame.hpp"

#include <cmath>

namespace otk {

std::variant<ConstructOutcome, ErrorCode> try_construct(const Tolerance& tol,
                                                        double R,
                                                        double theta) {
  if (!std::isfinite(R) || !(R > 1.0)) return ErrorCode::InvalidRadius;
  if (!std::isfinite(theta)) return ErrorCode::InvalidArgument;

  const Point a = apex_position(R, theta);
  // Reflection of the apex that the base chord must bisect perpendicularly.
  const Point ap = 0.5 * Point{3.0 - a.x, -a.y};
  const double m = norm(ap);

  if (m >= R + tol.absolute_eps) return ErrorCode::ForbiddenPosition;
  if (m >= R - tol.absolute_eps) return ErrorCode::DegenerateChord;  // tangent
  if (m <= tol.absolute_eps) return ErrorCode::DegenerateChord;  // A' at O

  const Point chord_dir = rot90(ap / m);
  const auto hits =
      circle_line_intersection(tol, {frame_o, R}, {ap, chord_dir});
  if (hits.count < 2) return ErrorCode::DegenerateChord;

  const bool first_forward = dot(hits.points[0] - ap, chord_dir) > 0.0;
  const Point braw = first_forward ? hits.points[0] : hits.points[1];
  const Point craw = first_forward ? hits.points[1] : hits.points[0];

  ConstructOutcome out{{a, braw, craw}, 1};
  if (signed_area(out.triangle) < 0.0) {
    out.triangle = {a, craw, braw};
    out.branch = -1;
  }
  if (std::abs(signed_area(out.triangle)) <=
      tol.absolute_eps * tol.absolute_eps) {
    return ErrorCode::DegenerateTriangle;  // apex meets a chord endpoint
  }
  return out;
}

ConstructOutcome construct(const Tolerance& tol, double R, double theta) {
  auto result = try_construct(tol, R, theta);
  if (auto* code = std::get_if<ErrorCode>(&result)) {
    raise(*code, "construct failed at R=" + std::to_string(R) +
                     " theta=" + std::to_string(theta));
  }
  return std::get<ConstructOutcome>(result);
}

ForbiddenArc forbidden_arc(const Tolerance& tol, double R) {
  if (!std::isfinite(R) || !(R > 1.0)) {
    raise(ErrorCode::InvalidRadius, "circumradius must exceed OG = 1");
  }
  ForbiddenArc arc;
  const auto hits = circle_circle_intersection(tol, {frame_o, R},
                                               orthocentroidal_circle());
  if (hits.count < 2) return arc;  // disc fully inside: no forbidden apexes

  arc.exists = true;
  arc.u = hits.points[0];
  arc.v = hits.points[1];
  // Apex positions whose reflected point lands exactly on U resp. V.
  arc.y = 3.0 * frame_g - 2.0 * arc.u;
  arc.z = 3.0 * frame_g - 2.0 * arc.v;
  return arc;
}

bool is_inside_orthocentroidal(const Tolerance& tol, Point p, Point o,
                               Point n) {
  const double on = distance(o, n);
  if (on <= tol.scaled(std::max(norm(o), norm(n)))) {
    raise(ErrorCode::EquilateralDegenerate,
          "circumcenter and nine-point center coincide");
  }
  return distance(o, p) - 2.0 * distance(p, n) > tol.scaled(on);
}

std::vector<SweepSample> sweep(const Tolerance& tol, double R, int n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "sweep needs n >= 1");
  if (!std::isfinite(R) || !(R > 1.0)) {
    raise(ErrorCode::InvalidRadius, "circumradius must exceed OG = 1");
  }
  std::vector<SweepSample> out;
  out.reserve(static_cast<size_t>(n));
  const double step = 2.0 * std::acos(-1.0) / n;
  for (int k = 0; k < n; ++k) {
    const double theta = step * k;
    out.push_back({theta, try_construct(tol, R, theta)});
  }
  return out;
}

}  // namespace otk
