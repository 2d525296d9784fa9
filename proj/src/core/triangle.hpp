#pragma once

#include <array>

#include "core/geom.hpp"

namespace otk {

struct Triangle {
  Point a, b, c;

  std::array<Point, 3> vertices() const { return {a, b, c}; }
};

// Positive for counterclockwise vertex order.
double signed_area(const Triangle& t);

// DegenerateTriangle unless all vertices are finite and |area| > abs_eps^2.
void require_valid(const Tolerance& tol, const Triangle& t);

// {|bc|, |ca|, |ab|}: lengths opposite a, b, c.
std::array<double, 3> side_lengths(const Triangle& t);

// Cosines of the angles at a, b, c.
std::array<double, 3> angle_cosines(const Tolerance& tol, const Triangle& t);

Point centroid(const Triangle& t);
Circle circumcircle(const Tolerance& tol, const Triangle& t);

// Intersection of the altitudes from a and b; the third altitude passes
// through it to tolerance.
Point orthocenter(const Tolerance& tol, const Triangle& t);

Circle incircle(const Tolerance& tol, const Triangle& t);

// Nine-point center: midpoint of circumcenter and orthocenter.
Point nine_point_center(const Tolerance& tol, const Triangle& t);

// Excenters opposite a, b, c.
std::array<Point, 3> excenters(const Tolerance& tol, const Triangle& t);

// True when the orthocenter and circumcenter coincide within
// relative_eps * circumradius.
bool is_equilateral(const Tolerance& tol, const Triangle& t);

// First isogonic point by the classical construction: erect equilateral
// triangles outward on two sides and intersect the joining lines. Valid for
// every nondegenerate triangle, including angles beyond 120 degrees.
Point fermat_point_synthetic(const Tolerance& tol, const Triangle& t);

struct CenterSet {
  Point centroid;
  Circle circumcircle;
  Point orthocenter;
  Circle incircle;
  Point nine_point_center;
  std::array<Point, 3> excenters;
  Point fermat;
};

CenterSet compute_centers(const Tolerance& tol, const Triangle& t);

// Apex-on-top normal form: a = apex height, b and c = distances from the
// altitude foot to the two base vertices, so the triangle is congruent to
// (0,a), (-b,0), (c,0). The apex carries the largest angle, which keeps the
// foot strictly between the base vertices.
struct BCFrame {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Direct isometry (or a reflection, when flipping is needed to put the apex
// above the base) between original and frame coordinates.
struct Placement {
  Point ex{1.0, 0.0};  // frame x axis, in original coordinates
  Point ey{0.0, 1.0};  // frame y axis
  Point origin;        // original point mapped to frame (0,0)

  Point to_frame(Point p) const {
    const Point q = p - origin;
    return {dot(ex, q), dot(ey, q)};
  }
  Point from_frame(Point q) const {
    return {origin.x + ex.x * q.x + ey.x * q.y,
            origin.y + ex.y * q.x + ey.y * q.y};
  }
  bool reflecting() const { return cross(ex, ey) < 0.0; }
};

struct BCFrameResult {
  BCFrame frame;
  Placement placement;
  int apex = 0;  // index of the vertex mapped to (0, a)
};

BCFrameResult to_bc_frame(const Tolerance& tol, const Triangle& t);

// Closed-form first isogonic point of the frame triangle
// (0,a), (-b,0), (c,0), valid for any positive a, b, c.
Point fermat_point_closed_form(const BCFrame& f);

}  // namespace otk
