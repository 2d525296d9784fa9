#pragma once

#include <variant>
#include <vector>

#include "core/triangle.hpp"

namespace otk {

// Normalized frame: circumcenter at the origin, centroid at (1,0). The
// remaining Euler-line points and the orthocentroidal circle are then fixed.
inline constexpr Point frame_o{0.0, 0.0};
inline constexpr Point frame_g{1.0, 0.0};
inline constexpr Point frame_n{1.5, 0.0};
inline constexpr Point frame_h{3.0, 0.0};

inline Circle orthocentroidal_circle() { return {{2.0, 0.0}, 1.0}; }

// Apex on the circumcircle of radius R.
inline Point apex_position(double R, double theta) {
  return {R * std::cos(theta), R * std::sin(theta)};
}

struct ConstructOutcome {
  Triangle triangle;  // counterclockwise; vertex a is the chosen apex
  int branch = 1;     // -1 when the raw chord labels were swapped to keep ccw
};

// Triangle with circumcircle (O, R) and centroid G: the side opposite the
// apex is the chord through A' = (3G - A)/2 perpendicular to OA'.
ConstructOutcome construct(const Tolerance& tol, double R, double theta);

// Same result, error code instead of an exception.
std::variant<ConstructOutcome, ErrorCode> try_construct(const Tolerance& tol,
                                                        double R,
                                                        double theta);

// Closed apex arc on which no triangle exists, present only for 1 < R < 3.
// U and V bound it on the orthocentroidal circle (u.y > 0); its endpoints on
// the circumcircle are Y = G - 2(U - G) and Z = G - 2(V - G).
struct ForbiddenArc {
  bool exists = false;
  Point u, v, y, z;
};

ForbiddenArc forbidden_arc(const Tolerance& tol, double R);

// Strict membership in the open disc bounded by {P : OP = 2 PN} for the
// given circumcenter and nine-point center. EquilateralDegenerate when the
// two coincide and the disc is undefined.
bool is_inside_orthocentroidal(const Tolerance& tol, Point p, Point o,
                               Point n);

struct SweepSample {
  double theta = 0.0;
  std::variant<ConstructOutcome, ErrorCode> result;
};

// n evenly spaced apex angles over [0, 2pi); failures are recorded, not
// thrown, so sweeps across the forbidden arc stay total.
std::vector<SweepSample> sweep(const Tolerance& tol, double R, int n);

}  // namespace otk
