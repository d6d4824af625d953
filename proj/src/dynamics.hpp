#ifndef REHO_DYNAMICS_HPP
#define REHO_DYNAMICS_HPP

#include <span>
#include <vector>

#include "coherent.hpp"
#include "ladder.hpp"
#include "spectrum.hpp"

namespace reho::dynamics {

// Propagate by one phase step: each entry's phase drops by E_nu t while
// magnitudes stay fixed.
ladder::coefficient_vector evolve(const ladder::coefficient_vector& v, double t);

// Sum of level energies weighted by |a_k|^2.
double energy_expectation(const ladder::coefficient_vector& v);

// Position probability density rho(x) = |sum_k a_k e^{-i E_k t} psi_k(x)|^2.
std::vector<double> density(const ladder::coefficient_vector& v,
                            std::span<const double> xs, double t);
double density_at(const ladder::coefficient_vector& v, double x, double t);

struct density_field {
  spectrum::spatial_grid grid;
  std::vector<double> times;
  std::vector<double> values;  // row-major: values[j * nx + i] = rho(x_i, t_j)

  std::size_t nx() const { return static_cast<std::size_t>(grid.n_points); }
  double at(std::size_t i, std::size_t j) const { return values[j * nx() + i]; }
};

density_field compute_density_field(const ladder::coefficient_vector& v,
                                    const spectrum::spatial_grid& grid,
                                    std::span<const double> times);

// Raw form of the field computation: rho over arbitrary sample points,
// laid out row-major with time as the slow index. Basis values are built
// once and shared across the time samples.
std::vector<double> density_rows(const ladder::coefficient_vector& v,
                                 std::span<const double> xs,
                                 std::span<const double> times);

// Trapezoid integral of density samples; the emitted deficit |1 - integral|
// makes truncation and grid-extent error observable instead of hiding it
// behind renormalization.
double grid_integral(std::span<const double> xs, std::span<const double> rho);

struct peak {
  double x;
  double height;
};

// Strict local maxima above an absolute threshold, deduplicated so that no
// two reported peaks sit closer than min_separation (tallest wins). The
// defaults resolve distinct wavepackets while rejecting interference ripple
// on finer scales.
std::vector<peak> find_peaks(std::span<const double> xs, std::span<const double> rho,
                             double threshold = 0.02, double min_separation = 0.5);

struct closed_form_energy {
  double shifted;  // lower parameters advanced by one in the numerator 1F3
  double printed;  // numerator 1F3 sharing the normalization parameters
};

// Closed-form energy expectation for the step-3 coherent state,
//   6 + 2 mu + (3|z|^2/4) / ((mu+2)(mu+1)(mu+6)) * 1F3(2; ...) / 1F3(1; ...).
// Both variants of the numerator parameters are returned; the coefficient
// sum adjudicates between them (the shifted variant is the one that agrees).
closed_form_energy energy_closed_form_c(double z_abs, int mu);

// Closed-form energy for any family: 6 + |z|^2 for the oscillator,
// 6 + 2 mu + 3 |z|^2 for the linearized family, the shifted-parameter form
// above for the step-3 family.
double energy_closed_form(const ladder::ladder_kind& kind, double z_abs);

struct cat_density_report {
  density_field field;
  std::vector<double> rho_at_origin;  // rho(0, t_j), the nodal-line trace
};

cat_density_report cat_density(const coherent::cat_spec& spec,
                               const spectrum::spatial_grid& grid,
                               std::span<const double> times,
                               const coherent::truncation_policy& policy = {});

// Density period: pi for the oscillator family, pi/3 for the step-3 ones.
double density_period(const ladder::ladder_kind& kind);

}  // namespace reho::dynamics

#endif
