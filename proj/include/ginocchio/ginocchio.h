/* C interface to the complex Ginocchio scattering library.
 *
 * All functions return a gin_status. On failure a thread-local message is
 * available from gin_last_error(). Handles are opaque and owned by the
 * caller; release them with the matching *_destroy function. */
#ifndef GINOCCHIO_H
#define GINOCCHIO_H

#include <stddef.h>

#if defined(GINOCCHIO_BUILDING_LIBRARY)
#define GIN_API __attribute__((visibility("default")))
#else
#define GIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gin_status {
  GIN_OK = 0,
  GIN_E_INVALID_ARGUMENT = 1,
  GIN_E_DOMAIN = 2,
  GIN_E_POLE = 3,
  GIN_E_NO_CONVERGENCE = 4,
  GIN_E_TRANSFORM_DEGENERATE = 5,
  GIN_E_NUMERICAL_OVERFLOW = 6,
  GIN_E_UNCLASSIFIABLE = 7,
  GIN_E_TAIL_NOT_DECAYED = 8,
  GIN_E_RESOLUTION = 9,
  GIN_E_NEAR_BOUNDARY = 10,
  GIN_E_POOR_FIT = 11,
  GIN_E_PARSE = 12,
  GIN_E_INTERNAL = 99
} gin_status;

typedef struct gin_complex {
  double re;
  double im;
} gin_complex;

GIN_API const char* gin_last_error(void);
GIN_API const char* gin_status_name(gin_status status);
GIN_API const char* gin_version(void);

/* ---- potential ---------------------------------------------------------- */

typedef struct gin_spec gin_spec;

/* sign is -1 or +1, a direct multiplier of lambda^2 nu (nu + 1). */
GIN_API gin_status gin_spec_create(gin_complex nu, double lambda, int sign,
                                   gin_spec** out);
GIN_API gin_status gin_spec_clone(const gin_spec* spec, gin_spec** out);
GIN_API void gin_spec_destroy(gin_spec* spec);
GIN_API gin_status gin_spec_get(const gin_spec* spec, gin_complex* nu,
                                double* lambda, int* sign);

GIN_API gin_status gin_x_of_y(double y, double lambda, double* x);
GIN_API gin_status gin_y_of_x(double x, double lambda, double* y);
GIN_API gin_status gin_potential(const gin_spec* spec, double x,
                                 gin_complex* out);
GIN_API gin_status gin_potential_origin(const gin_spec* spec,
                                        gin_complex* out);

typedef enum gin_profile {
  GIN_PROFILE_BARRIER = 0,
  GIN_PROFILE_WELL = 1,
  GIN_PROFILE_WELL_WITH_SIDE_BARRIERS = 2
} gin_profile;

typedef enum gin_emissivity {
  GIN_EMISSIVE = 0,
  GIN_ABSORPTIVE = 1,
  GIN_MIXED = 2,
  GIN_NON_EMISSIVE = 3
} gin_emissivity;

/* Both classifiers use a uniform-in-y grid of `points` samples (0: 2001). */
GIN_API gin_status gin_classify_profile(const gin_spec* spec, size_t points,
                                        gin_profile* out);
GIN_API gin_status gin_emissivity_of(const gin_spec* spec, size_t points,
                                     gin_emissivity* out);
GIN_API const char* gin_profile_name(gin_profile profile);
GIN_API const char* gin_emissivity_name(gin_emissivity e);

/* ---- scattering --------------------------------------------------------- */

typedef struct gin_scatter_options {
  int time_reversed;     /* evaluate at k -> -k */
  int flip_branch;       /* force mu -> -1 - mu */
  int alternate_binding; /* pair the sign of mu(E) the other way round */
} gin_scatter_options;

typedef struct gin_point {
  double energy;
  gin_complex delta; /* F + iG */
  gin_complex omega; /* H + iJ */
  gin_complex r;
  gin_complex t;
  double R;
  double T;
  double U;
  int at_singularity; /* R = T = +inf sentinel */
} gin_point;

/* options may be NULL for defaults. */
GIN_API gin_status gin_mu(const gin_spec* spec, double energy,
                          const gin_scatter_options* options,
                          gin_complex* out);
GIN_API gin_status gin_evaluate(const gin_spec* spec, double energy,
                                const gin_scatter_options* options,
                                gin_point* out);
/* Parallel over the energies; output order matches input order. threads = 0
 * uses the hardware concurrency. On failure *failed_index (if non-NULL)
 * receives the first failing index. */
GIN_API gin_status gin_evaluate_many(const gin_spec* spec,
                                     const double* energies, size_t count,
                                     const gin_scatter_options* options,
                                     unsigned threads, gin_point* out,
                                     size_t* failed_index);

/* ---- energy grids ------------------------------------------------------- */

typedef struct gin_grid {
  double e_min;
  double e_max;
  size_t points;
  int linear; /* 0: log spacing */
} gin_grid;

GIN_API gin_status gin_grid_default(gin_grid* out);
GIN_API gin_status gin_grid_validate(const gin_grid* grid);
/* Writes grid->points energies to out. */
GIN_API gin_status gin_grid_energies(const gin_grid* grid, double* out);

/* ---- spectral singularities --------------------------------------------- */

typedef enum gin_free_parameter {
  GIN_FREE_LAMBDA = 0,
  GIN_FREE_RE_NU = 1,
  GIN_FREE_IM_NU = 2,
  GIN_FREE_NU = 3
} gin_free_parameter;

typedef struct gin_search_options {
  gin_free_parameter free;
  double candidate_tolerance; /* gate on the closest approach |delta - n| */
  unsigned threads;
  gin_scatter_options scattering;
} gin_search_options;

typedef struct gin_candidate {
  double energy; /* root of G */
  int nearest_n;
  double f_distance;
  double closest_energy;
  double closest_distance;
} gin_candidate;

typedef struct gin_singularity {
  double energy;
  int n;
  double residual;
  gin_complex nu; /* refined parameters */
  double lambda;
  int sign;
  gin_free_parameter free;
  int iterations;
  int converged;
} gin_singularity;

typedef struct gin_second_verdict {
  int excluded;
  double witness_energy;
  double min_H;
  double min_H_energy;
} gin_second_verdict;

typedef struct gin_divergence {
  double R_below;
  double T_below;
  double R_above;
  double T_above;
  int sentinel_at_energy;
} gin_divergence;

typedef struct gin_ss_report gin_ss_report;

/* In the search, minima and unitarity calls a NULL grid selects the default
 * (0.01, 1000], 2000 log points, and NULL options the defaults. */

GIN_API gin_status gin_search_options_default(gin_search_options* out);
GIN_API gin_status gin_find_ss(const gin_spec* spec, const gin_grid* grid,
                               const gin_search_options* options,
                               gin_ss_report** out);
GIN_API void gin_ss_report_destroy(gin_ss_report* report);
GIN_API size_t gin_ss_report_candidate_count(const gin_ss_report* report);
GIN_API gin_status gin_ss_report_candidate(const gin_ss_report* report,
                                           size_t index, gin_candidate* out);
GIN_API size_t gin_ss_report_count(const gin_ss_report* report);
GIN_API gin_status gin_ss_report_get(const gin_ss_report* report, size_t index,
                                     gin_singularity* out);
GIN_API gin_status gin_ss_report_second(const gin_ss_report* report,
                                        gin_second_verdict* out);

/* Creates a spec from the refined parameters of a singularity. */
GIN_API gin_status gin_singularity_spec(const gin_singularity* ss,
                                        gin_spec** out);
GIN_API gin_status gin_check_divergence(const gin_singularity* ss,
                                        double rel_offset,
                                        gin_divergence* out);
GIN_API gin_status gin_exclude_second_ss(const gin_spec* spec,
                                         const gin_grid* grid,
                                         unsigned threads,
                                         const gin_scatter_options* options,
                                         gin_second_verdict* out);

/* ---- reflectivity minima and unitarity ---------------------------------- */

typedef struct gin_minimum {
  double energy;
  double R;
  int reflectionless; /* R < 1e-9 */
} gin_minimum;

typedef struct gin_minima gin_minima;

GIN_API gin_status gin_find_minima(const gin_spec* spec, const gin_grid* grid,
                                   unsigned threads,
                                   const gin_scatter_options* options,
                                   gin_minima** out);
GIN_API void gin_minima_destroy(gin_minima* minima);
GIN_API size_t gin_minima_count(const gin_minima* minima);
GIN_API gin_status gin_minima_get(const gin_minima* minima, size_t index,
                                  gin_minimum* out);

typedef struct gin_crossings gin_crossings;

GIN_API gin_status gin_unitarity_crossings(const gin_spec* spec,
                                           const gin_grid* grid,
                                           unsigned threads,
                                           const gin_scatter_options* options,
                                           gin_crossings** out);
GIN_API void gin_crossings_destroy(gin_crossings* crossings);
GIN_API size_t gin_crossings_count(const gin_crossings* crossings);
GIN_API double gin_crossings_get(const gin_crossings* crossings, size_t index);
GIN_API int gin_crossings_everywhere_unitary(const gin_crossings* crossings);

/* ---- ODE oracle --------------------------------------------------------- */

typedef struct gin_oracle_config {
  double half_width;     /* 0: automatic */
  double step;           /* 0: automatic */
  double tail_tolerance; /* 0: automatic */
} gin_oracle_config;

typedef struct gin_oracle_result {
  double R;
  double T;
  double U;
  gin_complex A;
  gin_complex B;
  double tail_residual;
  double step_estimate;
  double half_width;
  double step;
  int ill_conditioned;
} gin_oracle_result;

/* config may be NULL for automatic settings. */
GIN_API gin_status gin_oracle(const gin_spec* spec, double energy,
                              const gin_oracle_config* config,
                              gin_oracle_result* out);
GIN_API gin_status gin_oracle_left_right(const gin_spec* spec, double energy,
                                         const gin_oracle_config* config,
                                         double* R_left, double* R_right);

/* ---- exact wavefunction ------------------------------------------------- */

typedef struct gin_jost {
  gin_complex A;
  gin_complex B;
  gin_complex C;
  double residual_left;
  double residual_right;
  double R; /* |B/A|^2 */
  double T; /* |C/A|^2 */
} gin_jost;

GIN_API gin_status gin_psi(const gin_spec* spec, double energy, double x,
                           gin_complex* out);
/* lo = hi = 0 selects the default window; samples = 0 selects 64. */
GIN_API gin_status gin_jost_fit(const gin_spec* spec, double energy,
                                double lo, double hi, int samples,
                                gin_jost* out);

/* ---- published table of singular cases ---------------------------------- */

typedef struct gin_table_row {
  int id;
  int sign;
  gin_complex nu;
  double lambda;
  double e_star;
  int n;
  gin_complex v0_printed;
  gin_profile profile;
  int no_ss_family;
  const char* v0_discrepancy; /* empty when none is known */
} gin_table_row;

#define GIN_MAX_FAMILY_DRAWS 8

typedef struct gin_family_draw {
  gin_complex nu;
  double lambda;
  int sign;
  size_t certified;
  size_t candidates;
} gin_family_draw;

typedef struct gin_row_verdict {
  int id;
  size_t certified;
  int has_singularity;
  gin_singularity singularity;
  double e_rel_error;
  int e_ok;
  int n_ok;
  gin_complex v0_formula;
  int v0_ok;
  int v0_flagged;
  int has_profile;
  gin_profile profile_found;
  int profile_ok;
  int second_excluded;
  size_t draw_count;
  gin_family_draw draws[GIN_MAX_FAMILY_DRAWS];
  int no_ss_ok;
  int passed;
} gin_row_verdict;

GIN_API size_t gin_table_row_count(void);
GIN_API gin_status gin_table_get(size_t index, gin_table_row* out);
/* grid may be NULL for the default (1e-3, 1000], 2000 log points. */
GIN_API gin_status gin_table_check(size_t index, const gin_grid* grid,
                                   unsigned threads, gin_row_verdict* out);

#ifdef __cplusplus
}
#endif

#endif /* GINOCCHIO_H */
