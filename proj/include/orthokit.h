#ifndef ORTHOKIT_H
#define ORTHOKIT_H

/*
 * C surface of the plane-geometry kernel. The library constructs triangles
 * with a prescribed circumcircle and centroid, computes the classical
 * centers, sweeps incenter and isogonic-point families inside the
 * orthocentroidal disc, runs batch identity verification, and proves the
 * positivity factorization with exact integer arithmetic.
 *
 * Conventions:
 *   - every fallible call returns otk_status and writes results through out
 *     pointers, which are untouched on failure;
 *   - handles (otk_context, otk_trace, otk_verify, otk_proof) are opaque,
 *     created and released by the matching _new/_free pair, and immutable
 *     after creation except for otk_context_set_tolerance;
 *   - a NULL otk_context means the default tolerance (1e-9 absolute,
 *     1e-9 relative);
 *   - strings returned from a handle stay owned by that handle.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef OTK_API
#define OTK_API
#endif

typedef enum otk_status {
  OTK_OK = 0,
  OTK_ERR_DEGENERATE_TRIANGLE = 1,
  OTK_ERR_EQUILATERAL = 2,
  OTK_ERR_FORBIDDEN_POSITION = 3,
  OTK_ERR_DEGENERATE_CHORD = 4,
  OTK_ERR_INVALID_RADIUS = 5,
  OTK_ERR_OUTSIDE_DISC = 6,
  OTK_ERR_AT_NINE_POINT_CENTER = 7,
  OTK_ERR_MIDPOINT = 8,
  OTK_ERR_ANGLE_TOO_LARGE = 9,
  OTK_ERR_INVALID_ARGUMENT = 10,
  OTK_ERR_INTERNAL = 99
} otk_status;

typedef struct otk_point {
  double x;
  double y;
} otk_point;

typedef struct otk_triangle {
  otk_point a;
  otk_point b;
  otk_point c;
} otk_triangle;

typedef struct otk_circle {
  otk_point center;
  double radius;
} otk_circle;

typedef struct otk_center_set {
  otk_point centroid;
  otk_circle circumcircle;
  otk_point orthocenter;
  otk_circle incircle;
  otk_point nine_point_center;
  otk_point excenters[3]; /* opposite a, b, c */
  otk_point fermat;       /* first isogonic point */
} otk_center_set;

/* Apex arc with no valid triangle; present only for 1 < R < 3. U and V lie
 * on the orthocentroidal circle (u.y > 0), Y and Z are the matching apex
 * positions on the circumcircle. */
typedef struct otk_forbidden_arc {
  int exists;
  otk_point u;
  otk_point v;
  otk_point y;
  otk_point z;
} otk_forbidden_arc;

typedef struct otk_context otk_context;
typedef struct otk_trace otk_trace;
typedef struct otk_verify otk_verify;
typedef struct otk_proof otk_proof;

OTK_API const char* otk_version(void);
OTK_API const char* otk_status_name(otk_status status);

OTK_API otk_context* otk_context_new(void);
OTK_API void otk_context_free(otk_context* ctx);
OTK_API otk_status otk_context_set_tolerance(otk_context* ctx,
                                             double absolute_eps,
                                             double relative_eps);
OTK_API otk_status otk_context_get_tolerance(const otk_context* ctx,
                                             double* absolute_eps,
                                             double* relative_eps);

/* ---- Triangle centers ---- */

OTK_API otk_status otk_triangle_centers(const otk_context* ctx,
                                        const otk_triangle* tri,
                                        otk_center_set* out);

/* First isogonic point by the synthetic construction (valid for every
 * nondegenerate triangle). */
OTK_API otk_status otk_fermat_point(const otk_context* ctx,
                                    const otk_triangle* tri, otk_point* out);

/* Independent distance-sum minimizer; OTK_ERR_ANGLE_TOO_LARGE beyond 120
 * degrees. */
OTK_API otk_status otk_fermat_oracle(const otk_context* ctx,
                                     const otk_triangle* tri, otk_point* out);

OTK_API otk_status otk_is_equilateral(const otk_context* ctx,
                                      const otk_triangle* tri, int* out);

/* ---- Euler-line frame (circumcenter at origin, centroid at (1,0)) ---- */

/* Triangle with circumradius R and apex at angle theta; branch reports
 * whether the raw base labeling was kept (+1) or swapped (-1) to keep the
 * vertices counterclockwise. */
OTK_API otk_status otk_construct(const otk_context* ctx, double R,
                                 double theta, otk_triangle* out_triangle,
                                 int* out_branch);

OTK_API otk_status otk_forbidden_arc_compute(const otk_context* ctx, double R,
                                             otk_forbidden_arc* out);

/* Strict membership in the open disc {P : OP > 2 PN} for a general
 * circumcenter o and nine-point center n. */
OTK_API otk_status otk_point_in_disc(const otk_context* ctx, otk_point p,
                                     otk_point o, otk_point n, int* inside);

/* ---- Locus families ---- */

/* Residual of (x^2+y^2)^2 = R^2((2x-3)^2 + 4y^2) at p. */
OTK_API double otk_quartic_residual(otk_point p, double R);

/* Circumradius whose incenter curve passes through p; unique and > 1 for
 * every p strictly inside the disc. */
OTK_API otk_status otk_radius_for_point(const otk_context* ctx, otk_point p,
                                        double* out_radius);

typedef enum otk_locus_what {
  OTK_LOCUS_INCENTER = 0,
  OTK_LOCUS_FERMAT = 1
} otk_locus_what;

typedef enum otk_locus_kind {
  OTK_KIND_BELL = 0,         /* open arc between the boundary points U, V */
  OTK_KIND_CLOSED_AT_H = 1,  /* R = 3: closes at the orthocenter */
  OTK_KIND_LOBE = 2          /* R > 3: closed loop */
} otk_locus_kind;

OTK_API otk_status otk_trace_new(const otk_context* ctx, double R, int n,
                                 otk_locus_what what, otk_trace** out);
OTK_API void otk_trace_free(otk_trace* trace);
OTK_API size_t otk_trace_count(const otk_trace* trace);
OTK_API int otk_trace_rejected(const otk_trace* trace);
OTK_API otk_locus_kind otk_trace_kind(const otk_trace* trace);
OTK_API otk_status otk_trace_get(const otk_trace* trace, size_t index,
                                 double* theta, otk_point* p, int* branch);

/* ---- Batch verification ---- */

typedef struct otk_verify_config {
  uint64_t seed;
  long samples;
  double identity_threshold;
  double min_angle; /* radians; floor for the near-degenerate shape */
} otk_verify_config;

OTK_API void otk_verify_config_default(otk_verify_config* config);
OTK_API otk_status otk_verify_run(const otk_context* ctx,
                                  const otk_verify_config* config,
                                  otk_verify** out);
OTK_API void otk_verify_free(otk_verify* report);
OTK_API otk_status otk_verify_passed(const otk_verify* report, int* out);
OTK_API const char* otk_verify_json(const otk_verify* report);

/* Division parameter of the isogonic point on the centroid-orthocenter
 * segment for the isosceles frame (0,a),(-b,0),(b,0): t = a/(a + sqrt3 b).
 * OTK_ERR_MIDPOINT when a = sqrt3 b and the parameter is indeterminate. */
OTK_API otk_status otk_isosceles_fermat_parameter(const otk_context* ctx,
                                                  double a, double b,
                                                  double* out_t);

/* ---- Exact identity proof ---- */

OTK_API otk_status otk_prove(otk_proof** out);
OTK_API void otk_proof_free(otk_proof* proof);
OTK_API otk_status otk_proof_passed(const otk_proof* proof, int* out);
OTK_API otk_status otk_proof_equal(const otk_proof* proof, int* out);
OTK_API otk_status otk_proof_homogeneous(const otk_proof* proof, int* out);
OTK_API otk_status otk_proof_sum_of_squares(const otk_proof* proof, int* out);
/* Expanded witness, one "i j k rational root3" line per term, graded-lex. */
OTK_API const char* otk_proof_expansion(const otk_proof* proof);

#ifdef __cplusplus
}
#endif

#endif /* ORTHOKIT_H */
