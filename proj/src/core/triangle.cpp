#include "core/triangle.hpp"

#include <cmath>

namespace otk {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Apex of the equilateral triangle erected on pq, on the far side from `away`.
Point external_apex(Point p, Point q, Point away) {
  const Point mid = 0.5 * (p + q);
  const Point lift = std::sqrt(3.0) * rot90(0.5 * (q - p));
  Point apex = mid + lift;
  if (dot(apex - mid, away - mid) > 0.0) apex = mid - lift;
  return apex;
}

}  // namespace

double signed_area(const Triangle& t) {
  return 0.5 * cross(t.b - t.a, t.c - t.a);
}

void require_valid(const Tolerance& tol, const Triangle& t) {
  if (!finite(t.a) || !finite(t.b) || !finite(t.c)) {
    raise(ErrorCode::DegenerateTriangle, "nonfinite vertex");
  }
  if (std::abs(signed_area(t)) <= tol.absolute_eps * tol.absolute_eps) {
    raise(ErrorCode::DegenerateTriangle, "vertices are collinear");
  }
}

std::array<double, 3> side_lengths(const Triangle& t) {
  return {distance(t.b, t.c), distance(t.c, t.a), distance(t.a, t.b)};
}

std::array<double, 3> angle_cosines(const Tolerance& tol, const Triangle& t) {
  require_valid(tol, t);
  const auto [a, b, c] = side_lengths(t);
  return {(b * b + c * c - a * a) / (2.0 * b * c),
          (c * c + a * a - b * b) / (2.0 * c * a),
          (a * a + b * b - c * c) / (2.0 * a * b)};
}

Point centroid(const Triangle& t) { return (t.a + t.b + t.c) / 3.0; }

Circle circumcircle(const Tolerance& tol, const Triangle& t) {
  require_valid(tol, t);
  const Point u = t.b - t.a;
  const Point v = t.c - t.a;
  const double d = 2.0 * cross(u, v);
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  const Point center = t.a + Point{(v.y * uu - u.y * vv) / d,
                                   (u.x * vv - v.x * uu) / d};
  return {center, distance(center, t.a)};
}

Point orthocenter(const Tolerance& tol, const Triangle& t) {
  require_valid(tol, t);
  const Line from_a{t.a, rot90(line_through(t.b, t.c).direction)};
  const Line from_b{t.b, rot90(line_through(t.c, t.a).direction)};
  const auto h = line_intersection(tol, from_a, from_b);
  if (!h) raise(ErrorCode::DegenerateTriangle, "altitudes are parallel");
  return *h;
}

Circle incircle(const Tolerance& tol, const Triangle& t) {
  require_valid(tol, t);
  const auto [a, b, c] = side_lengths(t);
  const double perimeter = a + b + c;
  const Point center = (a * t.a + b * t.b + c * t.c) / perimeter;
  const double r = 2.0 * std::abs(signed_area(t)) / perimeter;
  return {center, r};
}

Point nine_point_center(const Tolerance& tol, const Triangle& t) {
  return 0.5 * (circumcircle(tol, t).center + orthocenter(tol, t));
}

std::array<Point, 3> excenters(const Tolerance& tol, const Triangle& t) {
  require_valid(tol, t);
  const auto [a, b, c] = side_lengths(t);
  return {(-a * t.a + b * t.b + c * t.c) / (-a + b + c),
          (a * t.a - b * t.b + c * t.c) / (a - b + c),
          (a * t.a + b * t.b - c * t.c) / (a + b - c)};
}

bool is_equilateral(const Tolerance& tol, const Triangle& t) {
  const Circle cc = circumcircle(tol, t);
  return distance(cc.center, orthocenter(tol, t)) <
         tol.relative_eps * cc.radius;
}

Point fermat_point_synthetic(const Tolerance& tol, const Triangle& t) {
  require_valid(tol, t);
  const Point p = external_apex(t.b, t.c, t.a);
  const Point q = external_apex(t.a, t.c, t.b);
  const auto x =
      line_intersection(tol, line_through(t.a, p), line_through(t.b, q));
  if (!x) raise(ErrorCode::DegenerateTriangle, "isogonic lines are parallel");
  return *x;
}

CenterSet compute_centers(const Tolerance& tol, const Triangle& t) {
  CenterSet cs;
  cs.centroid = centroid(t);
  cs.circumcircle = circumcircle(tol, t);
  cs.orthocenter = orthocenter(tol, t);
  cs.incircle = incircle(tol, t);
  cs.nine_point_center = 0.5 * (cs.circumcircle.center + cs.orthocenter);
  cs.excenters = excenters(tol, t);
  cs.fermat = fermat_point_synthetic(tol, t);
  return cs;
}

BCFrameResult to_bc_frame(const Tolerance& tol, const Triangle& t) {
  const auto cosines = angle_cosines(tol, t);
  int apex = 0;
  for (int i = 1; i < 3; ++i) {
    if (cosines[i] < cosines[apex]) apex = i;
  }
  const auto v = t.vertices();
  const Point a = v[apex];
  const Point b = v[(apex + 1) % 3];
  const Point c = v[(apex + 2) % 3];

  const Point ex = line_through(b, c).direction;
  const Point n = rot90(ex);
  const double lift = dot(a - b, n);
  const Point ey = lift >= 0.0 ? n : -1.0 * n;

  BCFrameResult out;
  out.apex = apex;
  out.frame.b = dot(a - b, ex);
  out.frame.c = distance(b, c) - out.frame.b;
  out.frame.a = std::abs(lift);
  out.placement = {ex, ey, b + out.frame.b * ex};
  // The apex holds the largest angle, so both base angles are acute and the
  // altitude foot lands strictly between the base vertices.
  if (!(out.frame.b > 0.0) || !(out.frame.c > 0.0)) {
    raise(ErrorCode::DegenerateTriangle, "altitude foot outside the base");
  }
  return out;
}

Point fermat_point_closed_form(const BCFrame& f) {
  const double a = f.a;
  const double b = f.b;
  const double c = f.c;
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0) || !std::isfinite(a + b + c)) {
    raise(ErrorCode::InvalidArgument, "frame sides must be positive");
  }
  const double s3 = std::sqrt(3.0);
  const double u = (s3 * b * c - s3 * a * a - a * c - a * b) * (b - c);
  const double v = (a * a + s3 * a * b + s3 * a * c + 3.0 * b * c) * (b + c);
  const double d = 2.0 * s3 * (a * a + b * b + c * c) + 6.0 * a * c +
                   6.0 * a * b + 2.0 * s3 * b * c;
  return {u / d, v / d};
}

}  // namespace otk
