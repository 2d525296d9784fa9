#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core/sampler.hpp"
#include "core/triangle.hpp"

namespace otk {

// rho = OI, sigma = IN, kappa = OH.
struct DistanceScalars {
  double rho = 0.0;
  double sigma = 0.0;
  double kappa = 0.0;
};

DistanceScalars distance_scalars(const CenterSet& cs);

// Raw residuals, no gating. LHS minus RHS of each identity.

// OI^2 = R(R - 2r).
double euler_relation_residual(const CenterSet& cs);

// IN = R/2 - r.
double feuerbach_residual(const CenterSet& cs);

// OI^2 - 4 IN^2 equals 2r(R - 2r) and (2r/R) OI^2.
std::array<double, 2> combined_identity_residuals(const CenterSet& cs);

// Guinand's cubic in x = cos(angle):
// rho^4 (1-2x)^3 + 8 rho^2 sigma^2 x (3-2x) - 16 sigma^4 x
//   - 4 sigma^2 kappa^2 (1-x).
double guinand_cubic_residual(const DistanceScalars& s, double x);

// The cubic vanishes at all three angle cosines. EquilateralDegenerate when
// every distance collapses and the cubic is vacuous.
std::array<double, 3> guinand_cubic_residuals(const Tolerance& tol,
                                              const Triangle& t);

// OH^2 = R^2 (1 - 8 cosA cosB cosC).
double distance_product_residual(const Tolerance& tol, const Triangle& t);

// rho^4 (1 - 8 cosA cosB cosC) = 4 sigma^2 kappa^2, the product of the
// cubic's roots read off its coefficients.
double viete_residual(const DistanceScalars& s,
                      const std::array<double, 3>& cosines);

struct PositionCheck {
  bool ok = false;
  double min_margin = 0.0;  // scaled by circumradius
};

// Incenter strictly inside the orthocentroidal disc (OI > 2 IN), every
// excenter strictly outside (OE < 2 EN).
PositionCheck incenter_position_check(const Tolerance& tol, const Triangle& t);

// First isogonic point strictly inside the disc (OT > 2 NT).
PositionCheck fermat_position_check(const Tolerance& tol, const Triangle& t);

// Expanded positivity witness for the frame triangle (0,a),(-b,0),(c,0):
// a d u (c-b) + d v (a^2 + 3bc) - a b c d^2 - 3 a u^2 - 3 a v^2 with u, v, d
// the closed-form isogonic numerators. Positive except for the equilateral
// frame a = sqrt(3) b, b = c, where it vanishes (EquilateralDegenerate).
double fermat_frame_lhs(const Tolerance& tol, const BCFrame& f);

// The same quantity as its closed factorization
// 2 (b+c) (sqrt3(a^2+b^2+c^2+bc) + 3ab + 3ac) ((a^2-3bc)^2 + a^2(b-c)^2).
double fermat_frame_factored(const BCFrame& f);

// Fourth factor in raw and sum-of-squares form; equal up to rounding.
double fermat_frame_quartic_raw(const BCFrame& f);
double fermat_frame_quartic_sos(const BCFrame& f);

// Isosceles frame (0,a),(-b,0),(b,0): the isogonic point divides GH so that
// T = G + t (H - G) with t = a / (a + sqrt3 b). Midpoint when a = sqrt3 b
// exactly (G and H collapse onto T).
double isosceles_fermat_parameter(const Tolerance& tol, double a, double b);

// Independent minimizer of TA + TB + TC: vertex optimality test, then
// Weiszfeld iteration with Newton polish. AngleTooLarge beyond 120 degrees,
// where the minimizer sits at the obtuse vertex and the comparison against
// the isogonic construction stops being meaningful.
Point fermat_oracle(const Tolerance& tol, const Triangle& t);

struct VerifyConfig {
  std::uint64_t seed = 0;
  long samples = 100000;       // split across the four sampler shapes
  double identity_threshold = 1e-8;
  double min_angle = 1e-4;     // NearDegenerate floor, radians
};

struct IdentityStat {
  std::string name;
  long samples = 0;
  double max_scaled_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct CheckStat {
  std::string name;
  long samples = 0;
  long counterexamples = 0;
  double min_margin = 0.0;
  bool pass = false;
};

struct VerifyReport {
  VerifyConfig config;
  Tolerance tolerance;
  std::vector<IdentityStat> identities;
  std::vector<CheckStat> checks;
  bool pass = false;
  double elapsed_seconds = 0.0;  // informational; not serialized
};

VerifyReport verify_run(const Tolerance& tol, const VerifyConfig& config);

// Stable serialization: identical configs give byte-identical reports.
std::string verify_report_json(const VerifyReport& report);

}  // namespace otk
