#pragma once

#include <cmath>
#include <optional>

#include "core/error.hpp"
#include "core/tolerance.hpp"

namespace otk {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }

inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::sqrt(p.x * p.x + p.y * p.y); }

// Counterclockwise quarter turn.
inline Point rot90(Point p) { return {-p.y, p.x}; }

double distance(Point p, Point q);

// Infinite line through `point` with unit `direction`.
struct Line {
  Point point;
  Point direction;
};

// InvalidArgument if p and q coincide.
Line line_through(Point p, Point q);

struct Circle {
  Point center;
  double radius = 1.0;
};

// Zero, one or two points; two points are ordered by descending y, ties by
// descending x. One point means tangency within tolerance.
struct Intersections {
  int count = 0;
  Point points[2] = {};
};

// nullopt when the lines are parallel within tolerance.
std::optional<Point> line_intersection(const Tolerance& tol, const Line& l1,
                                       const Line& l2);

// Concentric circles (equal ones included) report no intersection.
Intersections circle_circle_intersection(const Tolerance& tol, const Circle& c1,
                                         const Circle& c2);

Intersections circle_line_intersection(const Tolerance& tol, const Circle& c,
                                       const Line& l);

}  // namespace otk
