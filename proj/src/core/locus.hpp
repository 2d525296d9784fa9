#pragma once

#include "core/euler_frame.hpp"

namespace otk {

// Family shape by circumradius: open arc between the boundary points U and V
// (1 < R < 3), closed through H (R = 3), closed loop away from H (R > 3).
enum class LocusKind { Bell, ClosedAtH, Lobe };

enum class LocusWhat { Incenter, Fermat };

// Residual of (x^2 + y^2)^2 = R^2 ((2x - 3)^2 + 4 y^2), the curve traced by
// incenters of apex sweeps at circumradius R.
double quartic_residual(Point p, double R);

// Circumradius whose incenter curve passes through p; unique with R > 1 for
// every p strictly inside the orthocentroidal disc. OutsideDisc outside,
// AtNinePointCenter at the removed point N where every curve accumulates.
double radius_for_point(const Tolerance& tol, Point p);

// (x^2 + y^2)^2 > (2x - 3)^2 + 4 y^2: the quartic numerator beats the
// denominator, so the recovered circumradius exceeds 1.
bool radius_inequality_holds(Point p);

LocusKind classify_locus(const Tolerance& tol, double R);

struct TracePoint {
  double theta = 0.0;
  Point p;
  int branch = 1;
};

struct LocusTrace {
  double R = 0.0;
  int n = 0;
  LocusWhat what = LocusWhat::Incenter;
  LocusKind kind = LocusKind::Bell;
  std::vector<TracePoint> points;  // theta-ordered; forbidden apexes skipped
  int rejected = 0;
};

// Sweep n apex angles and record the tracked center of each valid triangle.
LocusTrace trace_locus(const Tolerance& tol, double R, int n, LocusWhat what);

}  // namespace otk
