#include "core/geom.hpp"

namespace otk {

namespace {

void order_pair(Intersections& out) {
  const Point a = out.points[0];
  const Point b = out.points[1];
  if (b.y > a.y || (b.y == a.y && b.x > a.x)) {
    out.points[0] = b;
    out.points[1] = a;
  }
}

}  // namespace

double distance(Point p, Point q) { return norm(p - q); }

Line line_through(Point p, Point q) {
  const Point d = q - p;
  const double len = norm(d);
  if (len == 0.0) {
    raise(ErrorCode::InvalidArgument, "line_through: coincident points");
  }
  return {p, d / len};
}

std::optional<Point> line_intersection(const Tolerance& tol, const Line& l1,
                                       const Line& l2) {
  // Unit directions, so the cross product is the sine of the crossing angle.
  const double denom = cross(l1.direction, l2.direction);
  if (std::abs(denom) <= tol.scaled(1.0)) return std::nullopt;
  const double t = cross(l2.point - l1.point, l2.direction) / denom;
  return l1.point + t * l1.direction;
}

Intersections circle_circle_intersection(const Tolerance& tol, const Circle& c1,
                                         const Circle& c2) {
  Intersections out;
  const Point delta = c2.center - c1.center;
  const double d = norm(delta);
  const double scale = std::max(std::abs(c1.radius), std::abs(c2.radius));
  if (d <= tol.scaled(scale)) return out;  // concentric

  // Distance from c1.center to the radical line along the center axis.
  const double along =
      (c1.radius * c1.radius - c2.radius * c2.radius + d * d) / (2.0 * d);
  const double disc = c1.radius * c1.radius - along * along;
  const double collapse = tol.scaled(scale * scale);
  if (disc < -collapse) return out;

  const Point axis = delta / d;
  const Point foot = c1.center + along * axis;
  if (disc <= collapse) {
    out.count = 1;
    out.points[0] = foot;
    return out;
  }
  const Point offset = std::sqrt(disc) * rot90(axis);
  out.count = 2;
  out.points[0] = foot + offset;
  out.points[1] = foot - offset;
  order_pair(out);
  return out;
}

Intersections circle_line_intersection(const Tolerance& tol, const Circle& c,
                                       const Line& l) {
  Intersections out;
  const double along = dot(c.center - l.point, l.direction);
  const Point foot = l.point + along * l.direction;
  const Point gap = foot - c.center;
  const double disc = c.radius * c.radius - dot(gap, gap);
  const double collapse = tol.scaled(c.radius * c.radius);
  if (disc < -collapse) return out;
  if (disc <= collapse) {
    out.count = 1;
    out.points[0] = foot;
    return out;
  }
  const double h = std::sqrt(disc);
  out.count = 2;
  out.points[0] = foot + h * l.direction;
  out.points[1] = foot - h * l.direction;
  order_pair(out);
  return out;
}

}  // namespace otk
