#include "spectrum.hpp"

#include <cmath>
#include <numbers>

#include "specfun.hpp"

namespace reho::spectrum {

namespace {

double h2(double x) { return 4.0 * x * x + 2.0; }

void check_level(system_tag system, long nu) {
  if (!valid_level(system, nu)) {
    throw error(errc::bad_index, "invalid level for system");
  }
}

}  // namespace

bool valid_level(system_tag system, long nu) {
  if (system == system_tag::minus) return nu == -3 || nu >= 0;
  return nu >= 0;
}

double energy(system_tag system, long nu) {
  check_level(system, nu);
  if (system == system_tag::zero) return 2.0 * nu + 1.0;
  return 2.0 * (nu + 3.0);
}

double potential_minus(double x) {
  const double d = h2(x);
  return x * x + 16.0 * (4.0 * x * x - 2.0) / (d * d) - 2.0;
}

double eop_polynomial(long k, double x) {
  if (k == 0) return 1.0;
  if (k < 3) throw error(errc::bad_index, "eop_polynomial: degrees 1 and 2 are gaps");
  const long nu = k - 3;
  return -h2(x) * specfun::hermite(static_cast<int>(nu + 1), x) -
         8.0 * x * specfun::hermite(static_cast<int>(nu), x);
}

double eigenfunction_plus(long nu, double x) {
  check_level(system_tag::plus, nu);
  return specfun::hermite_function(static_cast<int>(nu), x);
}

void eigenfunction_plus_table(long nu_max, double x, std::vector<double>& out) {
  check_level(system_tag::plus, nu_max);
  specfun::hermite_function_table(static_cast<int>(nu_max), x, out);
}

namespace {

double ground_state_minus(double x) {
  return std::sqrt(8.0 / std::sqrt(std::numbers::pi)) * std::exp(-0.5 * x * x) /
         h2(x);
}

// psi_nu^(-) written in terms of the normalized oscillator functions:
//   -( sqrt((nu+1)/(nu+3)) psi_{nu+1} + 8x / (H2 sqrt(2(nu+3))) psi_nu ).
// Identical to the polynomial form, but every factor stays O(1) at any level.
double combine_minus(long nu, double x, double psi_nu, double psi_nup1) {
  return -(std::sqrt((nu + 1.0) / (nu + 3.0)) * psi_nup1 +
           8.0 * x / (h2(x) * std::sqrt(2.0 * (nu + 3.0))) * psi_nu);
}

}  // namespace

double eigenfunction_minus(long nu, double x) {
  check_level(system_tag::minus, nu);
  if (nu == -3) return ground_state_minus(x);
  const double psi_nu = specfun::hermite_function(static_cast<int>(nu), x);
  const double psi_nup1 = specfun::hermite_function(static_cast<int>(nu + 1), x);
  return combine_minus(nu, x, psi_nu, psi_nup1);
}

void eigenfunction_minus_table(long nu_max, double x, std::vector<double>& out) {
  if (nu_max < 0 && nu_max != -3) {
    throw error(errc::bad_index, "eigenfunction_minus_table: invalid level");
  }
  const long top = std::max(nu_max, 0L);
  static thread_local std::vector<double> oscillator;
  specfun::hermite_function_table(static_cast<int>(top + 1), x, oscillator);
  out.resize(static_cast<std::size_t>(top) + 2);
  out[0] = ground_state_minus(x);
  for (long nu = 0; nu <= nu_max; ++nu) {
    out[minus_table_slot(nu)] = combine_minus(nu, x, oscillator[nu], oscillator[nu + 1]);
  }
}

std::vector<double> spatial_grid::points() const {
  validate();
  std::vector<double> xs(static_cast<std::size_t>(n_points));
  const double dx = (x_max - x_min) / (n_points - 1);
  if (x_min == -x_max) {
    const int half = n_points / 2;
    for (int i = half; i < n_points; ++i) xs[i] = x_min + i * dx;
    xs[n_points - 1] = x_max;
    if (n_points % 2 == 1) xs[half] = 0.0;
    for (int i = 0; i < half; ++i) xs[i] = -xs[n_points - 1 - i];
  } else {
    for (int i = 0; i < n_points; ++i) xs[i] = x_min + i * dx;
    xs.back() = x_max;
  }
  return xs;
}

void spatial_grid::validate() const {
  if (!(x_min < x_max) || n_points < 2) {
    throw error(errc::bad_argument, "spatial_grid: need x_min < x_max and n_points >= 2");
  }
}

}  // namespace reho::spectrum
