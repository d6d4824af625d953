#include "ladder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace reho::ladder {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_minus_kind(const coefficient_vector& v, int mu, const char* op) {
  if (!valid_mu(mu)) throw error(errc::bad_mu, std::string(op) + ": mu must be -3, 1, or 2");
  if (v.kind().system() != spectrum::system_tag::minus || v.kind().mu != mu) {
    throw error(errc::ladder_mismatch,
                std::string(op) + ": state does not live on the requested mu-subspace");
  }
}

log_polar scaled(const log_polar& in, double factor) {
  if (factor == 0.0 || in.log_mag == kNegInf) return log_polar_zero();
  return {in.log_mag + std::log(std::fabs(factor)),
          factor < 0.0 ? in.phase + std::numbers::pi : in.phase};
}

// Shared shift-down/shift-up machinery; factor(k) multiplies the amplitude
// arriving at output slot k.
template <typename FactorFn>
apply_result shift_down(const coefficient_vector& v, FactorFn factor) {
  std::vector<log_polar> out(v.size(), log_polar_zero());
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    out[k] = scaled(v.entry(k + 1), factor(k));
  }
  return {coefficient_vector(v.kind(), std::move(out)), 0.0};
}

template <typename FactorFn>
apply_result shift_up(const coefficient_vector& v, std::size_t max_size,
                      FactorFn factor) {
  std::size_t out_size = v.size() + 1;
  double dropped = 0.0;
  if (max_size != 0 && out_size > max_size) {
    out_size = max_size;
    for (std::size_t k = out_size; k <= v.size(); ++k) {
      const log_polar top = scaled(v.entry(k - 1), factor(k));
      if (top.log_mag != kNegInf) dropped += std::exp(2.0 * top.log_mag);
    }
  }
  std::vector<log_polar> out(out_size, log_polar_zero());
  for (std::size_t k = 1; k < out_size; ++k) {
    out[k] = scaled(v.entry(k - 1), factor(k));
  }
  return {coefficient_vector(v.kind(), std::move(out)), dropped};
}

}  // namespace

bool valid_mu(int mu) { return mu == -3 || mu == 1 || mu == 2; }

ladder_kind ladder_kind::make_c(int mu) {
  if (!valid_mu(mu)) throw error(errc::bad_mu, "ladder_kind: mu must be -3, 1, or 2");
  return {ladder_family::c, mu};
}

ladder_kind ladder_kind::make_ctilde(int mu) {
  if (!valid_mu(mu)) throw error(errc::bad_mu, "ladder_kind: mu must be -3, 1, or 2");
  return {ladder_family::ctilde, mu};
}

log_polar log_polar_zero() { return {kNegInf, 0.0}; }

log_polar log_polar_from(std::complex<double> value) {
  if (value == std::complex<double>(0.0, 0.0)) return log_polar_zero();
  return {std::log(std::abs(value)), std::arg(value)};
}

coefficient_vector::coefficient_vector(ladder_kind kind,
                                       std::vector<log_polar> entries)
    : kind_(kind), entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw error(errc::bad_argument, "coefficient_vector: no entries");
  }
}

coefficient_vector coefficient_vector::basis_vector(ladder_kind kind,
                                                    std::size_t k,
                                                    std::size_t size) {
  if (k >= size) throw error(errc::bad_index, "basis_vector: index outside size");
  std::vector<log_polar> entries(size, log_polar_zero());
  entries[k] = {0.0, 0.0};
  return coefficient_vector(kind, std::move(entries));
}

double coefficient_vector::weight(std::size_t k) const {
  const log_polar& e = entries_[k];
  return e.log_mag == kNegInf ? 0.0 : std::exp(2.0 * e.log_mag);
}

std::complex<double> coefficient_vector::amplitude(std::size_t k) const {
  const log_polar& e = entries_[k];
  if (e.log_mag == kNegInf) return {0.0, 0.0};
  return std::polar(std::exp(e.log_mag), e.phase);
}

double coefficient_vector::norm_squared() const {
  // log-sum-exp over 2 log|a_k|, so the sum survives entries whose squared
  // magnitudes individually underflow.
  double max_log = kNegInf;
  for (const log_polar& e : entries_) max_log = std::max(max_log, e.log_mag);
  if (max_log == kNegInf) return 0.0;
  double acc = 0.0;
  for (const log_polar& e : entries_) {
    if (e.log_mag != kNegInf) acc += std::exp(2.0 * (e.log_mag - max_log));
  }
  return acc * std::exp(2.0 * max_log);
}

void coefficient_vector::normalize() {
  double max_log = kNegInf;
  for (const log_polar& e : entries_) max_log = std::max(max_log, e.log_mag);
  if (max_log == kNegInf) {
    throw error(errc::bad_argument, "normalize: zero vector");
  }
  double acc = 0.0;
  for (const log_polar& e : entries_) {
    if (e.log_mag != kNegInf) acc += std::exp(2.0 * (e.log_mag - max_log));
  }
  const double half_log_norm = max_log + 0.5 * std::log(acc);
  for (log_polar& e : entries_) {
    if (e.log_mag != kNegInf) e.log_mag -= half_log_norm;
  }
}

std::complex<double> inner_product(const coefficient_vector& bra,
                                   const coefficient_vector& ket) {
  if (bra.kind().system() != ket.kind().system()) {
    throw error(errc::ladder_mismatch, "inner_product: states live on different systems");
  }
  if (bra.kind().system() == spectrum::system_tag::minus &&
      bra.kind().mu != ket.kind().mu) {
    return {0.0, 0.0};  // disjoint level subspaces
  }
  std::complex<double> acc{0.0, 0.0};
  const std::size_t n = std::min(bra.size(), ket.size());
  for (std::size_t k = 0; k < n; ++k) {
    acc += std::conj(bra.amplitude(k)) * ket.amplitude(k);
  }
  return acc;
}

apply_result lower_a(const coefficient_vector& v) {
  if (v.kind().family != ladder_family::a) {
    throw error(errc::ladder_mismatch, "lower_a: state is not on the oscillator ladder");
  }
  return shift_down(v, [](std::size_t k) { return std::sqrt(2.0 * (k + 1.0)); });
}

apply_result raise_a(const coefficient_vector& v, std::size_t max_size) {
  if (v.kind().family != ladder_family::a) {
    throw error(errc::ladder_mismatch, "raise_a: state is not on the oscillator ladder");
  }
  return shift_up(v, max_size,
                  [](std::size_t k) { return std::sqrt(2.0 * static_cast<double>(k)); });
}

namespace {

double lowering_factor_c(long nu) {
  // Vanishes at nu = -3, 1, 2: the three lowest-weight states.
  const double arg = 8.0 * (nu - 1.0) * (nu - 2.0) * (nu + 3.0);
  return arg <= 0.0 ? 0.0 : -std::sqrt(arg);
}

double raising_factor_c(long nu) {
  const double arg = 8.0 * (nu + 2.0) * (nu + 1.0) * (nu + 6.0);
  return arg <= 0.0 ? 0.0 : -std::sqrt(arg);
}

}  // namespace

apply_result lower_c(const coefficient_vector& v, int mu) {
  check_minus_kind(v, mu, "lower_c");
  const ladder_kind kind = v.kind();
  return shift_down(
      v, [kind](std::size_t k) { return lowering_factor_c(kind.level_of(k + 1)); });
}

apply_result raise_c(const coefficient_vector& v, int mu, std::size_t max_size) {
  check_minus_kind(v, mu, "raise_c");
  const ladder_kind kind = v.kind();
  return shift_up(v, max_size, [kind](std::size_t k) {
    return raising_factor_c(kind.level_of(k - 1));
  });
}

apply_result lower_ctilde(const coefficient_vector& v, int mu) {
  check_minus_kind(v, mu, "lower_ctilde");
  return shift_down(v, [](std::size_t k) { return std::sqrt(2.0 * (k + 1.0)); });
}

apply_result raise_ctilde(const coefficient_vector& v, int mu, std::size_t max_size) {
  check_minus_kind(v, mu, "raise_ctilde");
  return shift_up(v, max_size,
                  [](std::size_t k) { return std::sqrt(2.0 * static_cast<double>(k)); });
}

double q_polynomial(double x) { return x * (x - 8.0) * (x - 10.0); }

double commutator_cc_dagger_eigenvalue(long nu) {
  const double e = spectrum::energy(spectrum::system_tag::minus, nu);
  return q_polynomial(e + 6.0) - q_polynomial(e);
}

namespace {

// Superpotentials of the three first-order factors. The middle one is the
// Krein-Adler factor with the 1/x singularity.
double h2_log_derivative(double x) { return 8.0 * x / (4.0 * x * x + 2.0); }
double w_first(double x) { return x + h2_log_derivative(x); }
double w_middle(double x) { return x - 1.0 / x; }
double w_last(double x) { return x + 1.0 / x - h2_log_derivative(x); }

// 6th-order central first derivative.
constexpr std::array<double, 7> kD1 = {-1.0 / 60.0, 3.0 / 20.0, -3.0 / 4.0, 0.0,
                                       3.0 / 4.0,   -3.0 / 20.0, 1.0 / 60.0};

}  // namespace

std::vector<double> apply_c_differential(long nu, std::span<const double> xs,
                                         double step) {
  if (!spectrum::valid_level(spectrum::system_tag::minus, nu)) {
    throw error(errc::bad_index, "apply_c_differential: invalid level");
  }
  if (!(step > 0.0) || step > 1e-2) {
    throw error(errc::bad_argument, "apply_c_differential: step must be in (0, 1e-2]");
  }
  for (double x : xs) {
    if (std::fabs(x) < 0.25) {
      throw error(errc::singular_region,
                  "apply_c_differential: points with |x| < 0.25 are excluded");
    }
  }

  std::vector<double> out;
  out.reserve(xs.size());
  std::array<double, 19> f;
  std::array<double, 13> g1;
  std::array<double, 7> g2;
  for (double x : xs) {
    for (int j = -9; j <= 9; ++j) {
      f[j + 9] = spectrum::eigenfunction_minus(nu, x + j * step);
    }
    for (int j = -6; j <= 6; ++j) {
      double d = 0.0;
      for (int s = -3; s <= 3; ++s) d += kD1[s + 3] * f[j + s + 9];
      g1[j + 6] = d / step + w_first(x + j * step) * f[j + 9];
    }
    for (int j = -3; j <= 3; ++j) {
      double d = 0.0;
      for (int s = -3; s <= 3; ++s) d += kD1[s + 3] * g1[j + s + 6];
      g2[j + 3] = d / step + w_middle(x + j * step) * g1[j + 6];
    }
    double d = 0.0;
    for (int s = -3; s <= 3; ++s) d += kD1[s + 3] * g2[s + 3];
    const double composite = d / step + w_last(x) * g2[3];
    // The first-order factors fix the composite only up to an overall sign;
    // the sign is pinned so the generic-ladder matrix elements carry the
    // same convention as lower_c.
    out.push_back(-composite);
  }
  return out;
}

}  // namespace reho::ladder
