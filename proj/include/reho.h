/*
 * reho - rationally extended harmonic oscillator toolkit.
 *
 * C interface to the core library: coherent and cat states of the
 * oscillator ladder, the step-3 ladder, and its linearized version on the
 * rationally extended partner system, plus densities, energies, overlaps,
 * and the built-in verification suite.
 *
 * All functions returning reho_status report REHO_OK on success. On
 * failure the out-parameters carry no meaningful data and
 * reho_last_error() describes the problem for the calling thread.
 */

#ifndef REHO_H
#define REHO_H

#include <stddef.h>

#if defined(__GNUC__) || defined(__clang__)
#define REHO_API __attribute__((visibility("default")))
#else
#define REHO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum reho_status {
  REHO_OK = 0,
  REHO_ERROR_BAD_ARGUMENT = 1,
  REHO_ERROR_BAD_INDEX = 2,
  REHO_ERROR_BAD_MU = 3,
  REHO_ERROR_LADDER_MISMATCH = 4,
  REHO_ERROR_PARAMETER_POLE = 5,
  REHO_ERROR_DEGENERATE_CAT = 6,
  REHO_ERROR_SINGULAR_REGION = 7,
  REHO_ERROR_TRUNCATION_CAP = 8,
  REHO_ERROR_INTERNAL = 9
} reho_status;

typedef enum reho_ladder {
  REHO_LADDER_A = 0,      /* oscillator annihilation operator */
  REHO_LADDER_C = 1,      /* step-3 annihilation operator, needs mu */
  REHO_LADDER_CTILDE = 2  /* linearized step-3 operator, needs mu */
} reho_ladder;

typedef enum reho_parity { REHO_PARITY_EVEN = 0, REHO_PARITY_ODD = 1 } reho_parity;

/* Opaque handle for a normalized state expanded over one energy ladder. */
typedef struct reho_state reho_state;

REHO_API const char* reho_version(void);
REHO_API const char* reho_status_name(reho_status status);
REHO_API const char* reho_last_error(void);

/*
 * Coherent state of the chosen annihilation operator with eigenvalue
 * z = z_re + i z_im. mu selects the ladder subspace (-3, 1, or 2) and is
 * ignored for REHO_LADDER_A. max_terms caps the adaptive expansion length
 * (pass 0 for the default cap of 5000); hitting the cap fails with
 * REHO_ERROR_TRUNCATION_CAP.
 */
REHO_API reho_status reho_coherent_state(reho_ladder ladder, int mu, double z_re,
                                         double z_im, size_t max_terms,
                                         reho_state** out_state);

/* Even/odd superposition of the +z and -z coherent states. */
REHO_API reho_status reho_cat_state(reho_ladder ladder, int mu, double z_re,
                                    double z_im, reho_parity parity,
                                    size_t max_terms, reho_state** out_state);

REHO_API void reho_state_free(reho_state* state);

/* Number of retained expansion coefficients. */
REHO_API size_t reho_state_size(const reho_state* state);

/*
 * Coefficient k as (level, log-magnitude, phase); exact zeros carry
 * log-magnitude -infinity.
 */
REHO_API reho_status reho_state_coefficient(const reho_state* state, size_t k,
                                            long* out_level, double* out_log_mag,
                                            double* out_phase);

/* Energy expectation of the state. */
REHO_API reho_status reho_state_energy(const reho_state* state, double* out_energy);

/*
 * Residual norm || alpha |state> - z |state> || of the defining eigenvalue
 * equation; fails for cat states, which are not eigenvectors.
 */
REHO_API reho_status reho_state_eigen_residual(const reho_state* state,
                                               double* out_residual);

/*
 * Position probability density at time t on the nx points xs; out_rho must
 * hold nx doubles.
 */
REHO_API reho_status reho_state_density(const reho_state* state, double t,
                                        const double* xs, size_t nx,
                                        double* out_rho);

/*
 * Density on a time/space product grid; out_rho must hold nt * nx doubles,
 * laid out row-major with time as the slow index.
 */
REHO_API reho_status reho_state_density_field(const reho_state* state,
                                              const double* ts, size_t nt,
                                              const double* xs, size_t nx,
                                              double* out_rho);

/* Density period of the family: pi for A, pi/3 for C and CTILDE. */
REHO_API reho_status reho_density_period(reho_ladder ladder, double* out_period);

/* Real overlap <+z|-z> as a function of |z|. */
REHO_API reho_status reho_overlap(reho_ladder ladder, int mu, double z_abs,
                                  double* out_overlap);

/*
 * Closed-form energy expectation: 6 + |z|^2 for A, 6 + 2 mu + 3 |z|^2 for
 * CTILDE, and the hypergeometric-ratio form for C.
 */
REHO_API reho_status reho_energy_closed_form(reho_ladder ladder, int mu,
                                             double z_abs, double* out_energy);

/*
 * Strict local maxima of rho above `threshold`, thinned so no two reported
 * peaks lie within `min_separation`; returns the count.
 */
REHO_API reho_status reho_density_peaks(const double* xs, const double* rho,
                                        size_t n, double threshold,
                                        double min_separation, size_t* out_count);

/*
 * Uniform grid of n points on [x_min, x_max]; symmetric ranges are mirrored
 * exactly around zero. out_xs must hold n doubles.
 */
REHO_API reho_status reho_grid_linspace(double x_min, double x_max, size_t n,
                                        double* out_xs);

/*
 * Runs the verification suite. The callback receives every check's name,
 * measured value, tolerance, and pass flag. out_total / out_failed may be
 * NULL. Returns REHO_OK even when checks fail; inspect out_failed.
 */
typedef void (*reho_check_callback)(const char* name, double measured,
                                    double tolerance, int passed, void* user_data);
REHO_API reho_status reho_run_verification(reho_check_callback callback,
                                           void* user_data, size_t* out_total,
                                           size_t* out_failed);

#ifdef __cplusplus
}
#endif

#endif /* REHO_H */
