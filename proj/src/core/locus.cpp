#include "core/locus.hpp"

#include <cmath>

namespace otk {

double quartic_residual(Point p, double R) {
  const double rr = p.x * p.x + p.y * p.y;
  return rr * rr - R * R * ((2.0 * p.x - 3.0) * (2.0 * p.x - 3.0) +
                            4.0 * p.y * p.y);
}

double radius_for_point(const Tolerance& tol, Point p) {
  const double dx = p.x - 2.0;
  if (!(dx * dx + p.y * p.y < 1.0)) {
    raise(ErrorCode::OutsideDisc, "point not strictly inside the disc");
  }
  const double denom = (2.0 * p.x - 3.0) * (2.0 * p.x - 3.0) +
                       4.0 * p.y * p.y;
  if (denom < tol.absolute_eps * tol.absolute_eps) {
    raise(ErrorCode::AtNinePointCenter,
          "every curve accumulates at the nine-point center");
  }
  return (p.x * p.x + p.y * p.y) / std::sqrt(denom);
}

bool radius_inequality_holds(Point p) {
  const double rr = p.x * p.x + p.y * p.y;
  return rr * rr > (2.0 * p.x - 3.0) * (2.0 * p.x - 3.0) + 4.0 * p.y * p.y;
}

LocusKind classify_locus(const Tolerance& tol, double R) {
  if (!std::isfinite(R) || !(R > 1.0)) {
    raise(ErrorCode::InvalidRadius, "circumradius must exceed OG = 1");
  }
  if (std::abs(R - 3.0) <= tol.scaled(3.0)) return LocusKind::ClosedAtH;
  return R > 3.0 ? LocusKind::Lobe : LocusKind::Bell;
}

LocusTrace trace_locus(const Tolerance& tol, double R, int n, LocusWhat what) {
  if (n < 16) raise(ErrorCode::InvalidArgument, "trace needs n >= 16");
  LocusTrace trace;
  trace.R = R;
  trace.n = n;
  trace.what = what;
  trace.kind = classify_locus(tol, R);
  trace.points.reserve(static_cast<size_t>(n));
  for (const auto& sample : sweep(tol, R, n)) {
    const auto* ok = std::get_if<ConstructOutcome>(&sample.result);
    if (!ok) {
      ++trace.rejected;
      continue;
    }
    const Point p = what == LocusWhat::Incenter
                        ? incircle(tol, ok->triangle).center
                        : fermat_point_synthetic(tol, ok->triangle);
    trace.points.push_back({sample.theta, p, ok->branch});
  }
  return trace;
}

}  // namespace otk
