#ifndef REHO_SPECTRUM_HPP
#define REHO_SPECTRUM_HPP

#include <vector>

#include "error.hpp"

namespace reho::spectrum {

// The three systems: the plain oscillator, its shifted copy (+), and the
// rationally extended partner (-) whose spectrum gains a zero-energy
// ground state at level -3.
enum class system_tag { zero, plus, minus };

bool valid_level(system_tag system, long nu);

// Energies: 2 nu + 1 for the plain oscillator, 2 (nu + 3) for the pair of
// partner systems. Throws errc::bad_index for a level outside the system.
double energy(system_tag system, long nu);

// Partner potential x^2 + 16 (4x^2 - 2) / (4x^2 + 2)^2 - 2, a deep narrow
// well around the origin on top of the oscillator.
double potential_minus(double x);

// Hermite exceptional orthogonal polynomial y_k; the degree sequence has a
// gap at k = 1, 2.
double eop_polynomial(long k, double x);

// Normalized eigenfunctions of the shifted oscillator (+) and the extended
// partner (-). Evaluated through the normalized Hermite-function recurrence,
// so high levels neither overflow nor need explicit log-space constants.
double eigenfunction_plus(long nu, double x);
double eigenfunction_minus(long nu, double x);

// Batched variants for density sums: all levels up to nu_max at one x.
// For the (-) table, slot 0 holds level -3 and slot nu + 1 holds level nu.
void eigenfunction_plus_table(long nu_max, double x, std::vector<double>& out);
void eigenfunction_minus_table(long nu_max, double x, std::vector<double>& out);

inline std::size_t minus_table_slot(long nu) {
  return nu == -3 ? 0 : static_cast<std::size_t>(nu + 1);
}

struct spatial_grid {
  double x_min = -20.0;
  double x_max = 20.0;
  int n_points = 4001;

  // Sample points; symmetric grids are built by mirroring so that parity
  // holds exactly and x = 0 is hit exactly when n_points is odd.
  std::vector<double> points() const;
  void validate() const;
};

}  // namespace reho::spectrum

#endif
