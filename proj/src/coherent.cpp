#include "coherent.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "specfun.hpp"

namespace reho::coherent {

using ladder::coefficient_vector;
using ladder::ladder_kind;
using ladder::log_polar;

namespace {

// Grows a coefficient list until both truncation conditions hold. The
// supplied callback returns log|a_k| up to a common constant; phases are
// filled by the caller.
std::vector<double> adaptive_log_mags(const truncation_policy& policy,
                                      double peak_index,
                                      const std::function<double(std::size_t)>& log_mag) {
  std::vector<double> logs;
  logs.push_back(log_mag(0));
  double max_log = logs[0];
  for (std::size_t k = 1;; ++k) {
    if (k >= policy.max_terms) {
      throw error(errc::truncation_cap,
                  "coherent construction hit the truncation cap");
    }
    const double lk = log_mag(k);
    logs.push_back(lk);
    max_log = std::max(max_log, lk);
    if (static_cast<double>(k) <= peak_index) continue;
    const double rel_weight = std::exp(2.0 * (lk - max_log));
    if (rel_weight >= policy.edge_weight) continue;
    // Past the peak the weight ratio r < 1 shrinks monotonically, so the
    // remaining tail is bounded by the geometric estimate w r / (1 - r).
    const double ratio = std::exp(2.0 * (lk - logs[k - 1]));
    const double tail = ratio < 1.0 ? rel_weight * ratio / (1.0 - ratio)
                                    : std::numeric_limits<double>::infinity();
    if (tail < policy.tail_weight) break;
  }
  return logs;
}

coefficient_vector assemble(ladder_kind kind, const std::vector<double>& log_mags,
                            const std::function<double(std::size_t)>& phase) {
  std::vector<log_polar> entries(log_mags.size());
  for (std::size_t k = 0; k < log_mags.size(); ++k) {
    entries[k] = {log_mags[k], phase(k)};
  }
  coefficient_vector state(kind, std::move(entries));
  state.normalize();
  return state;
}

// Oscillator-type coefficients (z/sqrt(2))^k / sqrt(k!) over any ladder.
coefficient_vector poisson_family(ladder_kind kind, std::complex<double> z,
                                  const truncation_policy& policy) {
  const double z_abs = std::abs(z);
  if (z_abs == 0.0) {
    return coefficient_vector::basis_vector(kind, 0, 1);
  }
  const double log_z = std::log(z_abs / std::numbers::sqrt2);
  const double mean = 0.5 * z_abs * z_abs;
  const auto log_mag = [log_z](std::size_t k) {
    return static_cast<double>(k) * log_z - 0.5 * std::lgamma(k + 1.0);
  };
  const std::vector<double> logs = adaptive_log_mags(policy, mean, log_mag);
  const double arg = std::arg(z);
  return assemble(kind, logs, [arg](std::size_t k) { return k * arg; });
}

}  // namespace

ladder::coefficient_vector coherent_a(std::complex<double> z,
                                      const truncation_policy& policy) {
  return poisson_family(ladder_kind::make_a(), z, policy);
}

ladder::coefficient_vector coherent_ctilde(std::complex<double> z, int mu,
                                           const truncation_policy& policy) {
  return poisson_family(ladder_kind::make_ctilde(mu), z, policy);
}

ladder::coefficient_vector coherent_c(std::complex<double> z, int mu,
                                      const truncation_policy& policy) {
  const ladder_kind kind = ladder_kind::make_c(mu);
  const double z_abs = std::abs(z);
  if (z_abs == 0.0) {
    return coefficient_vector::basis_vector(kind, 0, 1);
  }
  const double b1 = (mu + 2) / 3.0;
  const double b2 = (mu + 1) / 3.0;
  const double b3 = (mu + 6) / 3.0;
  // log |a_k| (up to a constant) accumulated incrementally:
  //   log|z^k / D_k| = k log|z| - (3k/2) log 6 - (1/2) sum_i log|(b_i)_k|.
  // The Pochhammer triple is positive on every mu-subspace, so only the
  // (-1)^k of D_k contributes to the phase.
  std::vector<double> poch_logs{0.0};
  const auto log_mag = [&](std::size_t k) {
    if (k >= poch_logs.size()) {
      const double j = static_cast<double>(k) - 1.0;
      poch_logs.push_back(poch_logs.back() + std::log(std::fabs(b1 + j)) +
                          std::log(std::fabs(b2 + j)) + std::log(std::fabs(b3 + j)));
    }
    return k * std::log(z_abs) - 1.5 * k * std::log(6.0) - 0.5 * poch_logs[k];
  };
  // Weight ratio crosses 1 where |z|^2 = 216 (b1+k)(b2+k)(b3+k); bound the
  // peak location by the largest root estimate.
  const double peak = std::cbrt(z_abs * z_abs / 216.0) + 2.0;
  const std::vector<double> logs = adaptive_log_mags(policy, peak, log_mag);
  const double arg = std::arg(z) + std::numbers::pi;
  return assemble(kind, logs, [arg](std::size_t k) { return k * arg; });
}

ladder::coefficient_vector coherent_state(const coherent_spec& spec,
                                          const truncation_policy& policy) {
  switch (spec.kind.family) {
    case ladder::ladder_family::a:
      return coherent_a(spec.z, policy);
    case ladder::ladder_family::c:
      return coherent_c(spec.z, spec.kind.mu, policy);
    case ladder::ladder_family::ctilde:
      return coherent_ctilde(spec.z, spec.kind.mu, policy);
  }
  throw error(errc::bad_argument, "coherent_state: unknown ladder family");
}

double overlap_d(double z_abs, const ladder::ladder_kind& kind) {
  if (z_abs < 0.0) throw error(errc::bad_argument, "overlap_d: |z| must be >= 0");
  if (kind.family == ladder::ladder_family::a ||
      kind.family == ladder::ladder_family::ctilde) {
    return std::exp(-z_abs * z_abs);
  }
  if (!ladder::valid_mu(kind.mu)) {
    throw error(errc::bad_mu, "overlap_d: mu must be -3, 1, or 2");
  }
  const double b1 = (kind.mu + 2) / 3.0;
  const double b2 = (kind.mu + 1) / 3.0;
  const double b3 = (kind.mu + 6) / 3.0;
  const double w = z_abs * z_abs / 216.0;
  return specfun::hyp1f3(1.0, b1, b2, b3, -w) / specfun::hyp1f3(1.0, b1, b2, b3, w);
}

ladder::coefficient_vector cat_state(const cat_spec& spec,
                                     const truncation_policy& policy) {
  const bool odd = spec.parity == cat_parity::odd;
  if (odd && spec.base.z == std::complex<double>(0.0, 0.0)) {
    throw error(errc::degenerate_cat, "cat_state: odd cat is a zero vector at z = 0");
  }
  coefficient_vector base = coherent_state(spec.base, policy);
  // a_k(-z) = (-1)^k a_k(+z) for every family, so the superposition keeps
  // one parity class of k exactly and doubles it. Normalizing against the
  // coefficient-sum overlap keeps the total weight exactly one.
  double d = 0.0;
  for (std::size_t k = 0; k < base.size(); ++k) {
    const double w = base.weight(k);
    d += (k % 2 == 0) ? w : -w;
  }
  const double norm_sq = 2.0 * (odd ? 1.0 - d : 1.0 + d);
  if (!(norm_sq > 0.0)) {
    throw error(errc::degenerate_cat, "cat_state: superposition has zero norm");
  }
  const double log_scale = std::log(2.0) - 0.5 * std::log(norm_sq);
  std::vector<log_polar> entries(base.size(), ladder::log_polar_zero());
  for (std::size_t k = 0; k < base.size(); ++k) {
    if ((k % 2 == 1) == odd) {
      entries[k] = {base.entry(k).log_mag + log_scale, base.entry(k).phase};
    }
  }
  return coefficient_vector(base.kind(), std::move(entries));
}

}  // namespace reho::coherent
