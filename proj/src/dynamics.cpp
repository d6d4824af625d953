#include "dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "specfun.hpp"

namespace reho::dynamics {

using ladder::coefficient_vector;
using ladder::ladder_kind;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Basis values psi_{level(k)}(x) for every slot of a coefficient vector.
void basis_row(const ladder_kind& kind, std::size_t n_entries, double x,
               std::vector<double>& scratch, std::vector<double>& row) {
  row.resize(n_entries);
  if (kind.system() == spectrum::system_tag::plus) {
    specfun::hermite_function_table(static_cast<int>(n_entries) - 1, x, scratch);
    std::copy(scratch.begin(), scratch.end(), row.begin());
    return;
  }
  const long nu_max = kind.level_of(n_entries - 1);
  spectrum::eigenfunction_minus_table(nu_max, x, scratch);
  for (std::size_t k = 0; k < n_entries; ++k) {
    row[k] = scratch[spectrum::minus_table_slot(kind.level_of(k))];
  }
}

std::vector<std::complex<double>> phased_amplitudes(const coefficient_vector& v,
                                                    double t) {
  std::vector<std::complex<double>> amps(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const ladder::log_polar& e = v.entry(k);
    if (e.log_mag == kNegInf) {
      amps[k] = 0.0;
      continue;
    }
    const double energy = spectrum::energy(v.kind().system(), v.level_of(k));
    amps[k] = std::polar(std::exp(e.log_mag), e.phase - energy * t);
  }
  return amps;
}

}  // namespace

coefficient_vector evolve(const coefficient_vector& v, double t) {
  std::vector<ladder::log_polar> entries(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    entries[k] = v.entry(k);
    if (entries[k].log_mag != kNegInf) {
      entries[k].phase -= spectrum::energy(v.kind().system(), v.level_of(k)) * t;
    }
  }
  return coefficient_vector(v.kind(), std::move(entries));
}

double energy_expectation(const coefficient_vector& v) {
  double acc = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double w = v.weight(k);
    if (w > 0.0) acc += w * spectrum::energy(v.kind().system(), v.level_of(k));
  }
  return acc;
}

std::vector<double> density(const coefficient_vector& v, std::span<const double> xs,
                            double t) {
  const std::vector<std::complex<double>> amps = phased_amplitudes(v, t);
  std::vector<double> rho(xs.size());
  std::vector<double> scratch, row;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    basis_row(v.kind(), v.size(), xs[i], scratch, row);
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t k = 0; k < amps.size(); ++k) sum += amps[k] * row[k];
    rho[i] = std::norm(sum);
  }
  return rho;
}

double density_at(const coefficient_vector& v, double x, double t) {
  const double xs[1] = {x};
  return density(v, xs, t)[0];
}

std::vector<double> density_rows(const coefficient_vector& v,
                                 std::span<const double> xs,
                                 std::span<const double> times) {
  const std::size_t nx = xs.size();
  const std::size_t n = v.size();

  // Basis values are time independent; build them once per sample point.
  std::vector<double> basis(nx * n);
  {
    std::vector<double> scratch, row;
    for (std::size_t i = 0; i < nx; ++i) {
      basis_row(v.kind(), n, xs[i], scratch, row);
      std::copy(row.begin(), row.end(), basis.begin() + i * n);
    }
  }

  std::vector<double> values(nx * times.size());
  for (std::size_t j = 0; j < times.size(); ++j) {
    const std::vector<std::complex<double>> amps = phased_amplitudes(v, times[j]);
    for (std::size_t i = 0; i < nx; ++i) {
      const double* b = basis.data() + i * n;
      std::complex<double> sum{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) sum += amps[k] * b[k];
      values[j * nx + i] = std::norm(sum);
    }
  }
  return values;
}

density_field compute_density_field(const coefficient_vector& v,
                                    const spectrum::spatial_grid& grid,
                                    std::span<const double> times) {
  grid.validate();
  const std::vector<double> xs = grid.points();
  density_field field;
  field.grid = grid;
  field.times.assign(times.begin(), times.end());
  field.values = density_rows(v, xs, times);
  return field;
}

double grid_integral(std::span<const double> xs, std::span<const double> rho) {
  if (xs.size() != rho.size() || xs.size() < 2) {
    throw error(errc::bad_argument, "grid_integral: mismatched or short samples");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    acc += 0.5 * (rho[i] + rho[i + 1]) * (xs[i + 1] - xs[i]);
  }
  return acc;
}

std::vector<peak> find_peaks(std::span<const double> xs, std::span<const double> rho,
                             double threshold, double min_separation) {
  if (xs.size() != rho.size()) {
    throw error(errc::bad_argument, "find_peaks: mismatched samples");
  }
  std::vector<peak> candidates;
  for (std::size_t i = 1; i + 1 < rho.size(); ++i) {
    if (rho[i] > rho[i - 1] && rho[i] > rho[i + 1] && rho[i] >= threshold) {
      candidates.push_back({xs[i], rho[i]});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const peak& a, const peak& b) { return a.height > b.height; });
  std::vector<peak> accepted;
  for (const peak& c : candidates) {
    const bool clear = std::all_of(accepted.begin(), accepted.end(), [&](const peak& p) {
      return std::fabs(p.x - c.x) >= min_separation;
    });
    if (clear) accepted.push_back(c);
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const peak& a, const peak& b) { return a.x < b.x; });
  return accepted;
}

closed_form_energy energy_closed_form_c(double z_abs, int mu) {
  if (!ladder::valid_mu(mu)) {
    throw error(errc::bad_mu, "energy_closed_form_c: mu must be -3, 1, or 2");
  }
  const double b1 = (mu + 2) / 3.0;
  const double b2 = (mu + 1) / 3.0;
  const double b3 = (mu + 6) / 3.0;
  const double w = z_abs * z_abs / 216.0;
  const double base = 6.0 + 2.0 * mu;
  const double coeff =
      0.75 * z_abs * z_abs / ((mu + 2.0) * (mu + 1.0) * (mu + 6.0));
  const double denom = specfun::hyp1f3(1.0, b1, b2, b3, w);
  closed_form_energy result;
  result.shifted =
      base + coeff * specfun::hyp1f3(2.0, b1 + 1.0, b2 + 1.0, b3 + 1.0, w) / denom;
  result.printed = base + coeff * specfun::hyp1f3(2.0, b1, b2, b3, w) / denom;
  return result;
}

double energy_closed_form(const ladder_kind& kind, double z_abs) {
  switch (kind.family) {
    case ladder::ladder_family::a:
      return 6.0 + z_abs * z_abs;
    case ladder::ladder_family::ctilde:
      if (!ladder::valid_mu(kind.mu)) {
        throw error(errc::bad_mu, "energy_closed_form: mu must be -3, 1, or 2");
      }
      return 6.0 + 2.0 * kind.mu + 3.0 * z_abs * z_abs;
    case ladder::ladder_family::c:
      return energy_closed_form_c(z_abs, kind.mu).shifted;
  }
  throw error(errc::bad_argument, "energy_closed_form: unknown family");
}

cat_density_report cat_density(const coherent::cat_spec& spec,
                               const spectrum::spatial_grid& grid,
                               std::span<const double> times,
                               const coherent::truncation_policy& policy) {
  const coefficient_vector cat = coherent::cat_state(spec, policy);
  cat_density_report report;
  report.field = compute_density_field(cat, grid, times);
  report.rho_at_origin.reserve(times.size());
  for (double t : times) {
    report.rho_at_origin.push_back(density_at(cat, 0.0, t));
  }
  return report;
}

double density_period(const ladder_kind& kind) {
  return kind.family == ladder::ladder_family::a ? std::numbers::pi
                                                 : std::numbers::pi / 3.0;
}

}  // namespace reho::dynamics
