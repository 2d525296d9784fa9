#include "core/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace otk {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kPi = std::acos(-1.0);

bool near_equilateral_frame(const Tolerance& tol, const BCFrame& f) {
  return std::abs(f.a - kSqrt3 * f.b) <=
             tol.scaled(std::max(f.a, kSqrt3 * f.b)) &&
         std::abs(f.b - f.c) <= tol.scaled(std::max(f.b, f.c));
}

void require_frame(const BCFrame& f) {
  if (!(f.a > 0.0) || !(f.b > 0.0) || !(f.c > 0.0) ||
      !std::isfinite(f.a + f.b + f.c)) {
    raise(ErrorCode::InvalidArgument, "frame sides must be positive");
  }
}

struct FrameTerms {
  double u, v, d;
};

FrameTerms frame_terms(const BCFrame& f) {
  const double a = f.a, b = f.b, c = f.c;
  return {(kSqrt3 * b * c - kSqrt3 * a * a - a * c - a * b) * (b - c),
          (a * a + kSqrt3 * a * b + kSqrt3 * a * c + 3.0 * b * c) * (b + c),
          2.0 * kSqrt3 * (a * a + b * b + c * c) + 6.0 * a * c +
              6.0 * a * b + 2.0 * kSqrt3 * b * c};
}

}  // namespace

DistanceScalars distance_scalars(const CenterSet& cs) {
  return {distance(cs.circumcircle.center, cs.incircle.center),
          distance(cs.incircle.center, cs.nine_point_center),
          distance(cs.circumcircle.center, cs.orthocenter)};
}

double euler_relation_residual(const CenterSet& cs) {
  const double R = cs.circumcircle.radius;
  const double r = cs.incircle.radius;
  const double rho = distance(cs.circumcircle.center, cs.incircle.center);
  return rho * rho - R * (R - 2.0 * r);
}

double feuerbach_residual(const CenterSet& cs) {
  const double R = cs.circumcircle.radius;
  const double r = cs.incircle.radius;
  return distance(cs.incircle.center, cs.nine_point_center) -
         (0.5 * R - r);
}

std::array<double, 2> combined_identity_residuals(const CenterSet& cs) {
  const double R = cs.circumcircle.radius;
  const double r = cs.incircle.radius;
  const DistanceScalars ds = distance_scalars(cs);
  const double lhs = ds.rho * ds.rho - 4.0 * ds.sigma * ds.sigma;
  return {lhs - 2.0 * r * (R - 2.0 * r),
          lhs - (2.0 * r / R) * ds.rho * ds.rho};
}

double guinand_cubic_residual(const DistanceScalars& s, double x) {
  const double r2 = s.rho * s.rho;
  const double s2 = s.sigma * s.sigma;
  const double k2 = s.kappa * s.kappa;
  const double w = 1.0 - 2.0 * x;
  return r2 * r2 * w * w * w + 8.0 * r2 * s2 * x * (3.0 - 2.0 * x) -
         16.0 * s2 * s2 * x - 4.0 * s2 * k2 * (1.0 - x);
}

std::array<double, 3> guinand_cubic_residuals(const Tolerance& tol,
                                              const Triangle& t) {
  if (is_equilateral(tol, t)) {
    raise(ErrorCode::EquilateralDegenerate,
          "all distances vanish; the cubic is vacuous");
  }
  const CenterSet cs = compute_centers(tol, t);
  const DistanceScalars ds = distance_scalars(cs);
  const auto cosines = angle_cosines(tol, t);
  return {guinand_cubic_residual(ds, cosines[0]),
          guinand_cubic_residual(ds, cosines[1]),
          guinand_cubic_residual(ds, cosines[2])};
}

double distance_product_residual(const Tolerance& tol, const Triangle& t) {
  const Circle cc = circumcircle(tol, t);
  const Point h = orthocenter(tol, t);
  const auto c = angle_cosines(tol, t);
  const double oh = distance(cc.center, h);
  return oh * oh -
         cc.radius * cc.radius * (1.0 - 8.0 * c[0] * c[1] * c[2]);
}

double viete_residual(const DistanceScalars& s,
                      const std::array<double, 3>& cosines) {
  const double r2 = s.rho * s.rho;
  return r2 * r2 * (1.0 - 8.0 * cosines[0] * cosines[1] * cosines[2]) -
         4.0 * s.sigma * s.sigma * s.kappa * s.kappa;
}

PositionCheck incenter_position_check(const Tolerance& tol,
                                      const Triangle& t) {
  const CenterSet cs = compute_centers(tol, t);
  const Point o = cs.circumcircle.center;
  const Point n = cs.nine_point_center;
  const double R = cs.circumcircle.radius;
  PositionCheck out;
  out.min_margin = (distance(o, cs.incircle.center) -
                    2.0 * distance(cs.incircle.center, n)) /
                   R;
  for (const Point& e : cs.excenters) {
    const double margin = (2.0 * distance(e, n) - distance(o, e)) / R;
    out.min_margin = std::min(out.min_margin, margin);
  }
  out.ok = out.min_margin > 0.0;
  return out;
}

PositionCheck fermat_position_check(const Tolerance& tol, const Triangle& t) {
  const Circle cc = circumcircle(tol, t);
  const Point n = nine_point_center(tol, t);
  const Point f = fermat_point_synthetic(tol, t);
  PositionCheck out;
  out.min_margin =
      (distance(cc.center, f) - 2.0 * distance(f, n)) / cc.radius;
  out.ok = out.min_margin > 0.0;
  return out;
}

double fermat_frame_lhs(const Tolerance& tol, const BCFrame& f) {
  require_frame(f);
  if (near_equilateral_frame(tol, f)) {
    raise(ErrorCode::EquilateralDegenerate,
          "positivity witness vanishes for the equilateral frame");
  }
  const auto [u, v, d] = frame_terms(f);
  const double a = f.a, b = f.b, c = f.c;
  return a * d * u * (c - b) + d * v * (a * a + 3.0 * b * c) -
         a * b * c * d * d - 3.0 * a * u * u - 3.0 * a * v * v;
}

double fermat_frame_factored(const BCFrame& f) {
  require_frame(f);
  const double a = f.a, b = f.b, c = f.c;
  return 2.0 * (b + c) *
         (kSqrt3 * (a * a + b * b + c * c + b * c) + 3.0 * a * b +
          3.0 * a * c) *
         fermat_frame_quartic_sos(f);
}

double fermat_frame_quartic_raw(const BCFrame& f) {
  const double a = f.a, b = f.b, c = f.c;
  return a * a * a * a + a * a * b * b - 8.0 * a * a * b * c +
         a * a * c * c + 9.0 * b * b * c * c;
}

double fermat_frame_quartic_sos(const BCFrame& f) {
  const double a = f.a, b = f.b, c = f.c;
  const double p = a * a - 3.0 * b * c;
  const double q = a * (b - c);
  return p * p + q * q;
}

double isosceles_fermat_parameter(const Tolerance& tol, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a + b)) {
    raise(ErrorCode::InvalidArgument, "apex height and half base must be positive");
  }
  if (std::abs(a - kSqrt3 * b) <= tol.scaled(std::max(a, kSqrt3 * b))) {
    raise(ErrorCode::Midpoint,
          "equilateral shape: the division parameter is indeterminate at 1/2");
  }
  return a / (a + kSqrt3 * b);
}

Point fermat_oracle(const Tolerance& tol, const Triangle& t) {
  const auto cosines = angle_cosines(tol, t);
  const double cmin = std::min({cosines[0], cosines[1], cosines[2]});
  if (cmin < -0.5 - tol.scaled(1.0)) {
    raise(ErrorCode::AngleTooLarge,
          "largest angle exceeds 120 degrees; minimizer sits at a vertex");
  }

  const auto vs = t.vertices();
  // A vertex minimizes the distance sum iff the unit directions to the other
  // two vertices sum to length <= 1 (angle >= 120 degrees).
  for (int i = 0; i < 3; ++i) {
    const Point u1 = line_through(vs[i], vs[(i + 1) % 3]).direction;
    const Point u2 = line_through(vs[i], vs[(i + 2) % 3]).direction;
    if (norm(u1 + u2) <= 1.0 + tol.scaled(1.0)) return vs[i];
  }

  const auto sides = side_lengths(t);
  const double scale = std::max({sides[0], sides[1], sides[2]});
  const auto objective = [&](Point p) {
    return distance(p, vs[0]) + distance(p, vs[1]) + distance(p, vs[2]);
  };

  Point x = centroid(t);
  Point best = x;
  double best_grad = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 300; ++iter) {
    Point grad{0.0, 0.0};
    double h00 = 0.0, h01 = 0.0, h11 = 0.0;
    double wsum = 0.0;
    Point wacc{0.0, 0.0};
    for (const Point& v : vs) {
      const Point delta = x - v;
      const double d = std::max(norm(delta), 1e-18 * scale);
      const Point u = delta / d;
      grad = grad + u;
      h00 += (1.0 - u.x * u.x) / d;
      h01 += (-u.x * u.y) / d;
      h11 += (1.0 - u.y * u.y) / d;
      wsum += 1.0 / d;
      wacc = wacc + (1.0 / d) * v;
    }
    const double gn = norm(grad);
    if (gn < best_grad) {
      best_grad = gn;
      best = x;
    }
    if (gn <= 1e-12) break;

    if (iter < 40) {  // Weiszfeld warm-up, globally convergent
      x = wacc / wsum;
      continue;
    }
    const double det = h00 * h11 - h01 * h01;
    Point next;
    if (std::abs(det) > 1e-30) {
      Point step{(h01 * grad.y - h11 * grad.x) / det,
                 (h01 * grad.x - h00 * grad.y) / det};
      const double len = norm(step);
      if (len > 0.5 * scale) step = (0.5 * scale / len) * step;
      next = x + step;
      if (objective(next) > objective(x)) next = wacc / wsum;
    } else {
      next = wacc / wsum;
    }
    x = next;
  }
  return best;
}

namespace {

struct IdentityAcc {
  const char* name;
  double threshold;
  long n = 0;
  double max_scaled = 0.0;

  void add(double residual, double scale) {
    ++n;
    max_scaled = std::max(max_scaled, std::abs(residual) / scale);
  }
  IdentityStat stat() const {
    return {name, n, max_scaled, threshold, max_scaled <= threshold};
  }
};

struct CheckAcc {
  const char* name;
  long n = 0;
  long bad = 0;
  double min_margin = std::numeric_limits<double>::infinity();

  void add(bool ok, double margin) {
    ++n;
    if (!ok) ++bad;
    min_margin = std::min(min_margin, margin);
  }
  CheckStat stat() const { return {name, n, bad, min_margin, bad == 0}; }
};

}  // namespace

VerifyReport verify_run(const Tolerance& tol, const VerifyConfig& config) {
  if (!tol.valid() || config.samples < 10 || !(config.min_angle > 0.0) ||
      !(config.identity_threshold > 0.0)) {
    raise(ErrorCode::InvalidArgument, "bad verify configuration");
  }
  const auto t0 = std::chrono::steady_clock::now();

  VerifyReport rep;
  rep.config = config;
  rep.tolerance = tol;

  const double thr = config.identity_threshold;
  IdentityAcc euler{"euler_relation", thr};
  IdentityAcc feuerbach{"feuerbach_distance", thr};
  IdentityAcc comb_product{"combined_identity_product_form", thr};
  IdentityAcc comb_ratio{"combined_identity_ratio_form", thr};
  IdentityAcc guinand{"guinand_cubic", thr};
  IdentityAcc dist_product{"distance_product", thr};
  IdentityAcc viete{"viete_product_of_roots", thr};
  IdentityAcc frame_fact{"fermat_frame_factorization", 1e-9};
  IdentityAcc frame_sos{"fermat_frame_sum_of_squares", 1e-12};

  CheckAcc inc_pos{"incenter_inside_excenters_outside"};
  CheckAcc fer_pos{"fermat_inside_disc"};
  CheckAcc lhs_pos{"fermat_frame_lhs_positive"};
  CheckAcc oracle_agree{"fermat_oracle_agreement"};
  CheckAcc iso_param{"isosceles_parameter"};

  const long n_obtuse = 3 * config.samples / 10;
  const long n_near_eq = 2 * config.samples / 10;
  const long n_near_deg = config.samples / 10;
  const long n_uniform =
      config.samples - n_obtuse - n_near_eq - n_near_deg;
  const std::array<std::pair<SampleShape, long>, 4> buckets{{
      {SampleShape::Uniform, n_uniform},
      {SampleShape::Obtuse, n_obtuse},
      {SampleShape::NearEquilateral, n_near_eq},
      {SampleShape::NearDegenerate, n_near_deg},
  }};

  for (const auto& [shape, count] : buckets) {
    const TriangleSampler sampler{config.seed, shape, config.min_angle};
    for (long k = 0; k < count; ++k) {
      const Triangle t = sampler.at(static_cast<std::uint64_t>(k));
      const CenterSet cs = compute_centers(tol, t);
      const auto cosines = angle_cosines(tol, t);
      const DistanceScalars ds = distance_scalars(cs);
      const double R = cs.circumcircle.radius;
      const double rr = R * R;
      const double m = std::max({ds.rho, ds.sigma, ds.kappa});
      const double m4 = m * m * m * m;

      euler.add(euler_relation_residual(cs), rr);
      feuerbach.add(feuerbach_residual(cs), R);
      const auto comb = combined_identity_residuals(cs);
      comb_product.add(comb[0], rr);
      comb_ratio.add(comb[1], rr);
      for (double x : cosines) {
        guinand.add(guinand_cubic_residual(ds, x), m4);
      }
      const double oh2 = ds.kappa * ds.kappa;
      const double ccc = cosines[0] * cosines[1] * cosines[2];
      dist_product.add(oh2 - rr * (1.0 - 8.0 * ccc), rr);
      viete.add(viete_residual(ds, cosines), m4);

      {
        const Point o = cs.circumcircle.center;
        const Point n = cs.nine_point_center;
        double margin = (distance(o, cs.incircle.center) -
                         2.0 * distance(cs.incircle.center, n)) /
                        R;
        for (const Point& e : cs.excenters) {
          margin = std::min(margin,
                            (2.0 * distance(e, n) - distance(o, e)) / R);
        }
        inc_pos.add(margin > 0.0, margin);
      }
      const double fmargin =
          (distance(cs.circumcircle.center, cs.fermat) -
           2.0 * distance(cs.fermat, cs.nine_point_center)) /
          R;
      fer_pos.add(fmargin > 0.0, fmargin);

      const BCFrame f = to_bc_frame(tol, t).frame;
      if (!near_equilateral_frame(tol, f)) {
        const auto [u, v, d] = frame_terms(f);
        const double a = f.a, b = f.b, c = f.c;
        const double t1 = a * d * u * (c - b);
        const double t2 = d * v * (a * a + 3.0 * b * c);
        const double t3 = a * b * c * d * d;
        const double t4 = 3.0 * a * u * u;
        const double t5 = 3.0 * a * v * v;
        const double lhs = t1 + t2 - t3 - t4 - t5;
        const double term_scale = std::abs(t1) + std::abs(t2) +
                                  std::abs(t3) + std::abs(t4) +
                                  std::abs(t5);
        const double factored = fermat_frame_factored(f);
        frame_fact.add(lhs - factored, term_scale);
        lhs_pos.add(lhs > 0.0, lhs / term_scale);

        const double raw = fermat_frame_quartic_raw(f);
        const double sos = fermat_frame_quartic_sos(f);
        const double sos_scale = a * a * a * a + a * a * b * b +
                                 8.0 * a * a * b * c + a * a * c * c +
                                 9.0 * b * b * c * c;
        frame_sos.add(raw - sos, sos_scale);
      }
    }
  }

  // Oracle agreement on shapes with every angle below 120 degrees.
  const long n_oracle = std::max<long>(1, config.samples / 10);
  for (long k = 0; k < n_oracle; ++k) {
    DrawStream s(config.seed, static_cast<std::uint64_t>(k), 101);
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    do {
      alpha = s.next_in(0.1, 2.03);
      beta = s.next_in(0.1, std::min(2.03, kPi - alpha - 0.1));
      gamma = kPi - alpha - beta;
    } while (gamma < 0.1 || gamma > 2.03);
    const Triangle t = triangle_from_angles(
        alpha, beta, s.next_in(0.5, 2.0), s.next_in(0.0, 2.0 * kPi),
        {s.next_in(-2.0, 2.0), s.next_in(-2.0, 2.0)});
    const Point synthetic = fermat_point_synthetic(tol, t);
    const Point numeric = fermat_oracle(tol, t);
    const auto sides = side_lengths(t);
    const double diam = std::max({sides[0], sides[1], sides[2]});
    const double allowed = 1e-7 * diam;
    const double dist = distance(synthetic, numeric);
    oracle_agree.add(dist <= allowed, (allowed - dist) / allowed);
  }

  // Isosceles division parameter away from the equilateral ratio.
  const long n_iso = std::max<long>(1, config.samples / 10);
  for (long k = 0; k < n_iso; ++k) {
    DrawStream s(config.seed, static_cast<std::uint64_t>(k), 202);
    const double a = s.next_in(0.05, 5.0);
    const double b = s.next_in(0.05, 5.0);
    if (std::abs(a - kSqrt3 * b) <= 1e-4 * std::max(a, kSqrt3 * b)) {
      continue;  // collapse window handled by the Midpoint error path
    }
    const double t_param = isosceles_fermat_parameter(tol, a, b);
    // Direct projection of T = (0, b/sqrt3) onto the segment from
    // G = (0, a/3) to H = (0, b^2/a).
    const double t_direct =
        (b / kSqrt3 - a / 3.0) / (b * b / a - a / 3.0);
    const double err = std::abs(t_param - t_direct);
    const bool ok = err <= 1e-9 && t_param > 0.0 && t_param < 1.0 &&
                    std::abs(t_param - 0.5) > 1e-9;
    iso_param.add(ok, (1e-9 - err) / 1e-9);
  }

  rep.identities = {euler.stat(),       feuerbach.stat(),
                    comb_product.stat(), comb_ratio.stat(),
                    guinand.stat(),      dist_product.stat(),
                    viete.stat(),        frame_fact.stat(),
                    frame_sos.stat()};
  rep.checks = {inc_pos.stat(), fer_pos.stat(), lhs_pos.stat(),
                oracle_agree.stat(), iso_param.stat()};

  rep.pass = true;
  for (const auto& s : rep.identities) rep.pass = rep.pass && s.pass;
  for (const auto& s : rep.checks) rep.pass = rep.pass && s.pass;

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

std::string verify_report_json(const VerifyReport& rep) {
  nlohmann::ordered_json j;
  j["seed"] = rep.config.seed;
  j["samples"] = rep.config.samples;
  j["min_angle"] = rep.config.min_angle;
  j["identity_threshold"] = rep.config.identity_threshold;
  j["tolerance"] = {{"absolute_eps", rep.tolerance.absolute_eps},
                    {"relative_eps", rep.tolerance.relative_eps}};
  j["identities"] = nlohmann::ordered_json::array();
  for (const auto& s : rep.identities) {
    j["identities"].push_back({{"name", s.name},
                               {"samples", s.samples},
                               {"max_scaled_residual", s.max_scaled_residual},
                               {"threshold", s.threshold},
                               {"pass", s.pass}});
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& s : rep.checks) {
    j["checks"].push_back({{"name", s.name},
                           {"samples", s.samples},
                           {"counterexamples", s.counterexamples},
                           {"min_margin", s.min_margin},
                           {"pass", s.pass}});
  }
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

}  // namespace otk
