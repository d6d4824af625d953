#ifndef REHO_LADDER_HPP
#define REHO_LADDER_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "error.hpp"
#include "spectrum.hpp"

namespace reho::ladder {

enum class ladder_family { a, c, ctilde };

// Which annihilation operator defines a state family. The step-3 operators
// act inside one of three disjoint level subspaces {mu + 3k}, mu in
// {-3, 1, 2}; the oscillator operator acts on the full (+) spectrum.
struct ladder_kind {
  ladder_family family = ladder_family::a;
  int mu = 0;

  static ladder_kind make_a() { return {ladder_family::a, 0}; }
  static ladder_kind make_c(int mu);
  static ladder_kind make_ctilde(int mu);

  spectrum::system_tag system() const {
    return family == ladder_family::a ? spectrum::system_tag::plus
                                      : spectrum::system_tag::minus;
  }
  long level_of(std::size_t k) const {
    return family == ladder_family::a ? static_cast<long>(k)
                                      : mu + 3 * static_cast<long>(k);
  }
  bool operator==(const ladder_kind&) const = default;
};

bool valid_mu(int mu);

// One expansion coefficient stored as log-magnitude and phase, so states
// built from huge or tiny raw series terms keep full relative precision.
struct log_polar {
  double log_mag;
  double phase;
};

log_polar log_polar_zero();
log_polar log_polar_from(std::complex<double> value);

class coefficient_vector {
 public:
  coefficient_vector(ladder_kind kind, std::vector<log_polar> entries);

  static coefficient_vector basis_vector(ladder_kind kind, std::size_t k,
                                         std::size_t size);

  const ladder_kind& kind() const { return kind_; }
  std::size_t size() const { return entries_.size(); }
  const log_polar& entry(std::size_t k) const { return entries_[k]; }
  log_polar& entry(std::size_t k) { return entries_[k]; }
  long level_of(std::size_t k) const { return kind_.level_of(k); }

  double weight(std::size_t k) const;                 // |a_k|^2
  std::complex<double> amplitude(std::size_t k) const;
  double norm_squared() const;

  // Rescale so the weights sum to one (done in log space).
  void normalize();

 private:
  ladder_kind kind_;
  std::vector<log_polar> entries_;
};

// <bra|ket> over matching physical levels. Vectors living on different
// mu-subspaces share no level, so the result is exactly zero; vectors on
// different systems cannot be compared.
std::complex<double> inner_product(const coefficient_vector& bra,
                                   const coefficient_vector& ket);

struct apply_result {
  coefficient_vector state;
  // Weight of any amplitude shifted past the truncation cap. Downstream
  // normalization checks rely on this being reported rather than silently
  // lost; anything above 1e-12 deserves attention.
  double dropped_weight = 0.0;
};

// Oscillator ladder on the (+) system: out_k = sqrt(2(k+1)) in_{k+1} for
// lowering, the adjoint shifting the other way.
apply_result lower_a(const coefficient_vector& v);
apply_result raise_a(const coefficient_vector& v, std::size_t max_size = 0);

// Step-3 ladder on the (-) system,
//   c |nu> = -[2(nu-1) 2(nu-2) 2(nu+3)]^{1/2} |nu-3>,
// with exact zero modes at nu = -3, 1, 2.
apply_result lower_c(const coefficient_vector& v, int mu);
apply_result raise_c(const coefficient_vector& v, int mu, std::size_t max_size = 0);

// Linearized step-3 ladder: each subspace relabeled by kappa carries the
// oscillator action sqrt(2 kappa).
apply_result lower_ctilde(const coefficient_vector& v, int mu);
apply_result raise_ctilde(const coefficient_vector& v, int mu,
                          std::size_t max_size = 0);

// Q(x) = x (x - 8) (x - 10); [c, c^dag] acts diagonally with eigenvalue
// Q(E + 6) - Q(E).
double q_polynomial(double x);
double commutator_cc_dagger_eigenvalue(long nu);

// Independent differential realization of the step-3 lowering operator:
// the chain of three first-order factors applied to psi_nu^(-) by 7-point
// finite differences. Output points must satisfy |x| >= 0.25 because the
// middle factor carries a 1/x term that makes intermediates singular at
// the origin even though the composite is regular.
std::vector<double> apply_c_differential(long nu, std::span<const double> xs,
                                         double step = 1e-3);

}  // namespace reho::ladder

#endif
