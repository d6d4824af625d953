#ifndef REHO_COHERENT_HPP
#define REHO_COHERENT_HPP

#include <complex>

#include "ladder.hpp"

namespace reho::coherent {

struct truncation_policy {
  // Stop once the estimated remaining tail is below this fraction of the
  // accumulated weight...
  double tail_weight = 1e-14;
  // ...and the top kept weight is below this fraction of the peak weight.
  // The top coefficient bounds the annihilation-operator residual |z a_K|,
  // which must sit well under the 1e-8 eigen-residual budget even at z = 100.
  double edge_weight = 1e-26;
  // Hard cap on the number of retained terms.
  std::size_t max_terms = 5000;
};

struct coherent_spec {
  ladder::ladder_kind kind;
  std::complex<double> z;
};

enum class cat_parity { even, odd };

struct cat_spec {
  coherent_spec base;
  cat_parity parity = cat_parity::even;
};

// Normalized eigenvector of the oscillator annihilation operator:
// a_nu proportional to (z/sqrt(2))^nu / sqrt(nu!).
ladder::coefficient_vector coherent_a(std::complex<double> z,
                                      const truncation_policy& policy = {});

// Normalized eigenvector of the step-3 annihilation operator on the
// mu-subspace: a_k proportional to z^k / D_k with
// D_k = (-1)^k 6^{3k/2} [((mu+2)/3)_k ((mu+1)/3)_k ((mu+6)/3)_k]^{1/2}.
ladder::coefficient_vector coherent_c(std::complex<double> z, int mu,
                                      const truncation_policy& policy = {});

// Normalized eigenvector of the linearized step-3 operator: oscillator-type
// coefficients over the mu-subspace levels.
ladder::coefficient_vector coherent_ctilde(std::complex<double> z, int mu,
                                           const truncation_policy& policy = {});

ladder::coefficient_vector coherent_state(const coherent_spec& spec,
                                          const truncation_policy& policy = {});

// Real overlap <+z | -z>: exp(-|z|^2) for the oscillator and linearized
// families, a ratio of 1F3 values for the step-3 family.
double overlap_d(double z_abs, const ladder::ladder_kind& kind);

// Normalized symmetric/antisymmetric superposition of |+z> and |-z>.
// The even cat keeps only even k, the odd cat only odd k; the odd cat is
// degenerate (a zero vector) at z = 0.
ladder::coefficient_vector cat_state(const cat_spec& spec,
                                     const truncation_policy& policy = {});

}  // namespace reho::coherent

#endif
