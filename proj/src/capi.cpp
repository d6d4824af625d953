#include "reho.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "coherent.hpp"
#include "dynamics.hpp"
#include "error.hpp"
#include "ladder.hpp"
#include "spectrum.hpp"
#include "verify.hpp"

struct reho_state {
  reho::ladder::coefficient_vector coefficients;
  bool is_cat;
  std::complex<double> z;
};

namespace {

thread_local std::string t_last_error;

reho_status status_from(reho::errc code) {
  switch (code) {
    case reho::errc::bad_argument:
      return REHO_ERROR_BAD_ARGUMENT;
    case reho::errc::bad_index:
      return REHO_ERROR_BAD_INDEX;
    case reho::errc::bad_mu:
      return REHO_ERROR_BAD_MU;
    case reho::errc::ladder_mismatch:
      return REHO_ERROR_LADDER_MISMATCH;
    case reho::errc::parameter_pole:
      return REHO_ERROR_PARAMETER_POLE;
    case reho::errc::degenerate_cat:
      return REHO_ERROR_DEGENERATE_CAT;
    case reho::errc::singular_region:
      return REHO_ERROR_SINGULAR_REGION;
    case reho::errc::truncation_cap:
      return REHO_ERROR_TRUNCATION_CAP;
  }
  return REHO_ERROR_INTERNAL;
}

template <typename Fn>
reho_status guarded(Fn&& fn) {
  try {
    fn();
    return REHO_OK;
  } catch (const reho::error& e) {
    t_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return REHO_ERROR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return REHO_ERROR_INTERNAL;
  }
}

reho_status fail(reho_status status, const char* message) {
  t_last_error = message;
  return status;
}

reho::ladder::ladder_kind kind_from(reho_ladder ladder, int mu) {
  switch (ladder) {
    case REHO_LADDER_A:
      return reho::ladder::ladder_kind::make_a();
    case REHO_LADDER_C:
      return reho::ladder::ladder_kind::make_c(mu);
    case REHO_LADDER_CTILDE:
      return reho::ladder::ladder_kind::make_ctilde(mu);
  }
  throw reho::error(reho::errc::bad_argument, "unknown ladder family");
}

reho::coherent::truncation_policy policy_from(size_t max_terms) {
  reho::coherent::truncation_policy policy;
  if (max_terms > 0) policy.max_terms = max_terms;
  return policy;
}

}  // namespace

extern "C" {

const char* reho_version(void) { return "1.0.0"; }

const char* reho_status_name(reho_status status) {
  switch (status) {
    case REHO_OK:
      return "ok";
    case REHO_ERROR_BAD_ARGUMENT:
      return "bad argument";
    case REHO_ERROR_BAD_INDEX:
      return "bad index";
    case REHO_ERROR_BAD_MU:
      return "bad mu";
    case REHO_ERROR_LADDER_MISMATCH:
      return "ladder mismatch";
    case REHO_ERROR_PARAMETER_POLE:
      return "parameter pole";
    case REHO_ERROR_DEGENERATE_CAT:
      return "degenerate cat";
    case REHO_ERROR_SINGULAR_REGION:
      return "singular region";
    case REHO_ERROR_TRUNCATION_CAP:
      return "truncation cap";
    case REHO_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* reho_last_error(void) { return t_last_error.c_str(); }

reho_status reho_coherent_state(reho_ladder ladder, int mu, double z_re,
                                double z_im, size_t max_terms,
                                reho_state** out_state) {
  if (out_state == nullptr) return fail(REHO_ERROR_BAD_ARGUMENT, "null out_state");
  return guarded([&] {
    const std::complex<double> z{z_re, z_im};
    const auto kind = kind_from(ladder, mu);
    auto v = reho::coherent::coherent_state({kind, z}, policy_from(max_terms));
    *out_state = new reho_state{std::move(v), false, z};
  });
}

reho_status reho_cat_state(reho_ladder ladder, int mu, double z_re, double z_im,
                           reho_parity parity, size_t max_terms,
                           reho_state** out_state) {
  if (out_state == nullptr) return fail(REHO_ERROR_BAD_ARGUMENT, "null out_state");
  return guarded([&] {
    const std::complex<double> z{z_re, z_im};
    reho::coherent::cat_spec spec{{kind_from(ladder, mu), z},
                                  parity == REHO_PARITY_ODD
                                      ? reho::coherent::cat_parity::odd
                                      : reho::coherent::cat_parity::even};
    auto v = reho::coherent::cat_state(spec, policy_from(max_terms));
    *out_state = new reho_state{std::move(v), true, z};
  });
}

void reho_state_free(reho_state* state) { delete state; }

size_t reho_state_size(const reho_state* state) {
  return state == nullptr ? 0 : state->coefficients.size();
}

reho_status reho_state_coefficient(const reho_state* state, size_t k,
                                   long* out_level, double* out_log_mag,
                                   double* out_phase) {
  if (state == nullptr) return fail(REHO_ERROR_BAD_ARGUMENT, "null state");
  if (k >= state->coefficients.size()) {
    return fail(REHO_ERROR_BAD_INDEX, "coefficient index out of range");
  }
  if (out_level) *out_level = state->coefficients.level_of(k);
  if (out_log_mag) *out_log_mag = state->coefficients.entry(k).log_mag;
  if (out_phase) *out_phase = state->coefficients.entry(k).phase;
  return REHO_OK;
}

reho_status reho_state_energy(const reho_state* state, double* out_energy) {
  if (state == nullptr || out_energy == nullptr) {
    return fail(REHO_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out_energy = reho::dynamics::energy_expectation(state->coefficients);
  });
}

reho_status reho_state_eigen_residual(const reho_state* state,
                                      double* out_residual) {
  if (state == nullptr || out_residual == nullptr) {
    return fail(REHO_ERROR_BAD_ARGUMENT, "null argument");
  }
  if (state->is_cat) {
    return fail(REHO_ERROR_BAD_ARGUMENT, "cat states are not eigenvectors");
  }
  return guarded([&] {
    const auto& v = state->coefficients;
    reho::ladder::coefficient_vector lowered = [&] {
      switch (v.kind().family) {
        case reho::ladder::ladder_family::a:
          return reho::ladder::lower_a(v).state;
        case reho::ladder::ladder_family::c:
          return reho::ladder::lower_c(v, v.kind().mu).state;
        default:
          return reho::ladder::lower_ctilde(v, v.kind().mu).state;
      }
    }();
    double acc = 0.0;
    for (size_t k = 0; k < v.size(); ++k) {
      acc += std::norm(lowered.amplitude(k) - state->z * v.amplitude(k));
    }
    *out_residual = std::sqrt(acc);
  });
}

reho_status reho_state_density(const reho_state* state, double t, const double* xs,
                               size_t nx, double* out_rho) {
  if (state == nullptr || xs == nullptr || out_rho == nullptr || nx == 0) {
    return fail(REHO_ERROR_BAD_ARGUMENT, "null or empty argument");
  }
  return guarded([&] {
    const auto rho =
        reho::dynamics::density(state->coefficients, std::span(xs, nx), t);
    std::memcpy(out_rho, rho.data(), nx * sizeof(double));
  });
}

reho_status reho_state_density_field(const reho_state* state, const double* ts,
                                     size_t nt, const double* xs, size_t nx,
                                     double* out_rho) {
  if (state == nullptr || ts == nullptr || xs == nullptr || out_rho == nullptr ||
      nt == 0 || nx == 0) {
    return fail(REHO_ERROR_BAD_ARGUMENT, "null or empty argument");
  }
  return guarded([&] {
    const auto rho = reho::dynamics::density_rows(
        state->coefficients, std::span(xs, nx), std::span(ts, nt));
    std::memcpy(out_rho, rho.data(), rho.size() * sizeof(double));
  });
}

reho_status reho_density_period(reho_ladder ladder, double* out_period) {
  if (out_period == nullptr) return fail(REHO_ERROR_BAD_ARGUMENT, "null out_period");
  return guarded([&] {
    const int mu = ladder == REHO_LADDER_A ? 0 : -3;
    *out_period = reho::dynamics::density_period(kind_from(ladder, mu));
  });
}

reho_status reho_overlap(reho_ladder ladder, int mu, double z_abs,
                         double* out_overlap) {
  if (out_overlap == nullptr) return fail(REHO_ERROR_BAD_ARGUMENT, "null out_overlap");
  return guarded([&] {
    *out_overlap = reho::coherent::overlap_d(z_abs, kind_from(ladder, mu));
  });
}

reho_status reho_energy_closed_form(reho_ladder ladder, int mu, double z_abs,
                                    double* out_energy) {
  if (out_energy == nullptr) return fail(REHO_ERROR_BAD_ARGUMENT, "null out_energy");
  return guarded([&] {
    *out_energy = reho::dynamics::energy_closed_form(kind_from(ladder, mu), z_abs);
  });
}

reho_status reho_density_peaks(const double* xs, const double* rho, size_t n,
                               double threshold, double min_separation,
                               size_t* out_count) {
  if (xs == nullptr || rho == nullptr || out_count == nullptr) {
    return fail(REHO_ERROR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out_count = reho::dynamics::find_peaks(std::span(xs, n), std::span(rho, n),
                                            threshold, min_separation)
                     .size();
  });
}

reho_status reho_grid_linspace(double x_min, double x_max, size_t n,
                               double* out_xs) {
  if (out_xs == nullptr) return fail(REHO_ERROR_BAD_ARGUMENT, "null out_xs");
  if (n > static_cast<size_t>(std::numeric_limits<int>::max())) {
    return fail(REHO_ERROR_BAD_ARGUMENT, "grid size exceeds the supported range");
  }
  return guarded([&] {
    const reho::spectrum::spatial_grid grid{x_min, x_max, static_cast<int>(n)};
    const auto xs = grid.points();
    std::memcpy(out_xs, xs.data(), xs.size() * sizeof(double));
  });
}

reho_status reho_run_verification(reho_check_callback callback, void* user_data,
                                  size_t* out_total, size_t* out_failed) {
  return guarded([&] {
    const auto results = reho::verify::run_verification();
    size_t failed = 0;
    for (const auto& check : results) {
      if (!check.passed) ++failed;
      if (callback != nullptr) {
        callback(check.name.c_str(), check.measured, check.tolerance,
                 check.passed ? 1 : 0, user_data);
      }
    }
    if (out_total) *out_total = results.size();
    if (out_failed) *out_failed = failed;
  });
}

}  // extern "C"
