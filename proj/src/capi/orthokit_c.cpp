#include "orthokit.h"

#include <memory>
#include <new>
#include <string>

#include "core/euler_frame.hpp"
#include "core/locus.hpp"
#include "core/polyid.hpp"
#include "core/triangle.hpp"
#include "core/verify.hpp"

struct otk_context {
  otk::Tolerance tol;
};

struct otk_trace {
  otk::LocusTrace trace;
};

struct otk_verify {
  otk::VerifyReport report;
  std::string json;
};

struct otk_proof {
  otk::ProofResult result;
};

namespace {

const otk::Tolerance kDefaultTol{};

const otk::Tolerance& tol_of(const otk_context* ctx) {
  return ctx ? ctx->tol : kDefaultTol;
}

otk_status map_code(otk::ErrorCode code) {
  switch (code) {
    case otk::ErrorCode::DegenerateTriangle:
      return OTK_ERR_DEGENERATE_TRIANGLE;
    case otk::ErrorCode::EquilateralDegenerate:
      return OTK_ERR_EQUILATERAL;
    case otk::ErrorCode::ForbiddenPosition:
      return OTK_ERR_FORBIDDEN_POSITION;
    case otk::ErrorCode::DegenerateChord:
      return OTK_ERR_DEGENERATE_CHORD;
    case otk::ErrorCode::InvalidRadius:
      return OTK_ERR_INVALID_RADIUS;
    case otk::ErrorCode::OutsideDisc:
      return OTK_ERR_OUTSIDE_DISC;
    case otk::ErrorCode::AtNinePointCenter:
      return OTK_ERR_AT_NINE_POINT_CENTER;
    case otk::ErrorCode::Midpoint:
      return OTK_ERR_MIDPOINT;
    case otk::ErrorCode::AngleTooLarge:
      return OTK_ERR_ANGLE_TOO_LARGE;
    case otk::ErrorCode::InvalidArgument:
      return OTK_ERR_INVALID_ARGUMENT;
  }
  return OTK_ERR_INTERNAL;
}

template <typename F>
otk_status guarded(F&& f) {
  try {
    f();
    return OTK_OK;
  } catch (const otk::Error& e) {
    return map_code(e.code());
  } catch (...) {
    return OTK_ERR_INTERNAL;
  }
}

otk_point wrap(otk::Point p) { return {p.x, p.y}; }
otk::Point unwrap(otk_point p) { return {p.x, p.y}; }

otk_circle wrap(otk::Circle c) { return {wrap(c.center), c.radius}; }

otk_triangle wrap(const otk::Triangle& t) {
  return {wrap(t.a), wrap(t.b), wrap(t.c)};
}

otk::Triangle unwrap(const otk_triangle& t) {
  return {unwrap(t.a), unwrap(t.b), unwrap(t.c)};
}

}  // namespace

extern "C" {

const char* otk_version(void) { return "1.0.0"; }

const char* otk_status_name(otk_status status) {
  switch (status) {
    case OTK_OK: return "ok";
    case OTK_ERR_DEGENERATE_TRIANGLE: return "degenerate triangle";
    case OTK_ERR_EQUILATERAL: return "equilateral degeneracy";
    case OTK_ERR_FORBIDDEN_POSITION: return "apex on the forbidden arc";
    case OTK_ERR_DEGENERATE_CHORD: return "degenerate base chord";
    case OTK_ERR_INVALID_RADIUS: return "invalid circumradius";
    case OTK_ERR_OUTSIDE_DISC: return "point outside the disc";
    case OTK_ERR_AT_NINE_POINT_CENTER: return "at the nine-point center";
    case OTK_ERR_MIDPOINT: return "indeterminate midpoint parameter";
    case OTK_ERR_ANGLE_TOO_LARGE: return "angle exceeds 120 degrees";
    case OTK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OTK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

otk_context* otk_context_new(void) {
  return new (std::nothrow) otk_context{};
}

void otk_context_free(otk_context* ctx) { delete ctx; }

otk_status otk_context_set_tolerance(otk_context* ctx, double absolute_eps,
                                     double relative_eps) {
  if (!ctx) return OTK_ERR_INVALID_ARGUMENT;
  const otk::Tolerance candidate{absolute_eps, relative_eps};
  if (!candidate.valid()) return OTK_ERR_INVALID_ARGUMENT;
  ctx->tol = candidate;
  return OTK_OK;
}

otk_status otk_context_get_tolerance(const otk_context* ctx,
                                     double* absolute_eps,
                                     double* relative_eps) {
  if (!absolute_eps || !relative_eps) return OTK_ERR_INVALID_ARGUMENT;
  const otk::Tolerance& tol = tol_of(ctx);
  *absolute_eps = tol.absolute_eps;
  *relative_eps = tol.relative_eps;
  return OTK_OK;
}

otk_status otk_triangle_centers(const otk_context* ctx,
                                const otk_triangle* tri,
                                otk_center_set* out) {
  if (!tri || !out) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const otk::CenterSet cs =
        otk::compute_centers(tol_of(ctx), unwrap(*tri));
    out->centroid = wrap(cs.centroid);
    out->circumcircle = wrap(cs.circumcircle);
    out->orthocenter = wrap(cs.orthocenter);
    out->incircle = wrap(cs.incircle);
    out->nine_point_center = wrap(cs.nine_point_center);
    for (int i = 0; i < 3; ++i) out->excenters[i] = wrap(cs.excenters[i]);
    out->fermat = wrap(cs.fermat);
  });
}

otk_status otk_fermat_point(const otk_context* ctx, const otk_triangle* tri,
                            otk_point* out) {
  if (!tri || !out) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = wrap(otk::fermat_point_synthetic(tol_of(ctx), unwrap(*tri)));
  });
}

otk_status otk_fermat_oracle(const otk_context* ctx, const otk_triangle* tri,
                             otk_point* out) {
  if (!tri || !out) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = wrap(otk::fermat_oracle(tol_of(ctx), unwrap(*tri)));
  });
}

otk_status otk_is_equilateral(const otk_context* ctx, const otk_triangle* tri,
                              int* out) {
  if (!tri || !out) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = otk::is_equilateral(tol_of(ctx), unwrap(*tri)) ? 1 : 0;
  });
}

otk_status otk_construct(const otk_context* ctx, double R, double theta,
                         otk_triangle* out_triangle, int* out_branch) {
  if (!out_triangle) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const otk::ConstructOutcome outcome =
        otk::construct(tol_of(ctx), R, theta);
    *out_triangle = wrap(outcome.triangle);
    if (out_branch) *out_branch = outcome.branch;
  });
}

otk_status otk_forbidden_arc_compute(const otk_context* ctx, double R,
                                     otk_forbidden_arc* out) {
  if (!out) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const otk::ForbiddenArc arc = otk::forbidden_arc(tol_of(ctx), R);
    out->exists = arc.exists ? 1 : 0;
    out->u = wrap(arc.u);
    out->v = wrap(arc.v);
    out->y = wrap(arc.y);
    out->z = wrap(arc.z);
  });
}

otk_status otk_point_in_disc(const otk_context* ctx, otk_point p, otk_point o,
                             otk_point n, int* inside) {
  if (!inside) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *inside = otk::is_inside_orthocentroidal(tol_of(ctx), unwrap(p),
                                             unwrap(o), unwrap(n))
                  ? 1
                  : 0;
  });
}

double otk_quartic_residual(otk_point p, double R) {
  return otk::quartic_residual(unwrap(p), R);
}

otk_status otk_radius_for_point(const otk_context* ctx, otk_point p,
                                double* out_radius) {
  if (!out_radius) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_radius = otk::radius_for_point(tol_of(ctx), unwrap(p));
  });
}

otk_status otk_trace_new(const otk_context* ctx, double R, int n,
                         otk_locus_what what, otk_trace** out) {
  if (!out || (what != OTK_LOCUS_INCENTER && what != OTK_LOCUS_FERMAT)) {
    return OTK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    auto handle = std::make_unique<otk_trace>();
    handle->trace = otk::trace_locus(tol_of(ctx), R, n,
                                     what == OTK_LOCUS_INCENTER
                                         ? otk::LocusWhat::Incenter
                                         : otk::LocusWhat::Fermat);
    *out = handle.release();
  });
}

void otk_trace_free(otk_trace* trace) { delete trace; }

size_t otk_trace_count(const otk_trace* trace) {
  return trace ? trace->trace.points.size() : 0;
}

int otk_trace_rejected(const otk_trace* trace) {
  return trace ? trace->trace.rejected : 0;
}

otk_locus_kind otk_trace_kind(const otk_trace* trace) {
  if (!trace) return OTK_KIND_BELL;
  switch (trace->trace.kind) {
    case otk::LocusKind::Bell: return OTK_KIND_BELL;
    case otk::LocusKind::ClosedAtH: return OTK_KIND_CLOSED_AT_H;
    case otk::LocusKind::Lobe: return OTK_KIND_LOBE;
  }
  return OTK_KIND_BELL;
}

otk_status otk_trace_get(const otk_trace* trace, size_t index, double* theta,
                         otk_point* p, int* branch) {
  if (!trace || index >= trace->trace.points.size()) {
    return OTK_ERR_INVALID_ARGUMENT;
  }
  const otk::TracePoint& tp = trace->trace.points[index];
  if (theta) *theta = tp.theta;
  if (p) *p = wrap(tp.p);
  if (branch) *branch = tp.branch;
  return OTK_OK;
}

void otk_verify_config_default(otk_verify_config* config) {
  if (!config) return;
  config->seed = 0;
  config->samples = 100000;
  config->identity_threshold = 1e-8;
  config->min_angle = 1e-4;
}

otk_status otk_verify_run(const otk_context* ctx,
                          const otk_verify_config* config, otk_verify** out) {
  if (!config || !out) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto handle = std::make_unique<otk_verify>();
    handle->report = otk::verify_run(
        tol_of(ctx), {config->seed, config->samples,
                      config->identity_threshold, config->min_angle});
    handle->json = otk::verify_report_json(handle->report);
    *out = handle.release();
  });
}

void otk_verify_free(otk_verify* report) { delete report; }

otk_status otk_verify_passed(const otk_verify* report, int* out) {
  if (!report || !out) return OTK_ERR_INVALID_ARGUMENT;
  *out = report->report.pass ? 1 : 0;
  return OTK_OK;
}

const char* otk_verify_json(const otk_verify* report) {
  return report ? report->json.c_str() : nullptr;
}

otk_status otk_isosceles_fermat_parameter(const otk_context* ctx, double a,
                                          double b, double* out_t) {
  if (!out_t) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out_t = otk::isosceles_fermat_parameter(tol_of(ctx), a, b);
  });
}

otk_status otk_prove(otk_proof** out) {
  if (!out) return OTK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto handle = std::make_unique<otk_proof>();
    handle->result = otk::prove_frame_identity();
    *out = handle.release();
  });
}

void otk_proof_free(otk_proof* proof) { delete proof; }

otk_status otk_proof_passed(const otk_proof* proof, int* out) {
  if (!proof || !out) return OTK_ERR_INVALID_ARGUMENT;
  *out = (proof->result.equal && proof->result.homogeneous &&
          proof->result.sos)
             ? 1
             : 0;
  return OTK_OK;
}

otk_status otk_proof_equal(const otk_proof* proof, int* out) {
  if (!proof || !out) return OTK_ERR_INVALID_ARGUMENT;
  *out = proof->result.equal ? 1 : 0;
  return OTK_OK;
}

otk_status otk_proof_homogeneous(const otk_proof* proof, int* out) {
  if (!proof || !out) return OTK_ERR_INVALID_ARGUMENT;
  *out = proof->result.homogeneous ? 1 : 0;
  return OTK_OK;
}

otk_status otk_proof_sum_of_squares(const otk_proof* proof, int* out) {
  if (!proof || !out) return OTK_ERR_INVALID_ARGUMENT;
  *out = proof->result.sos ? 1 : 0;
  return OTK_OK;
}

const char* otk_proof_expansion(const otk_proof* proof) {
  return proof ? proof->result.expansion.c_str() : nullptr;
}

}  // extern "C"
