#ifndef REHO_SPECFUN_HPP
#define REHO_SPECFUN_HPP

#include <functional>
#include <vector>

#include "error.hpp"

namespace reho::specfun {

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
// H_{n+1} = 2 x H_n - 2 n H_{n-1}.
double hermite(int n, double x);

// Modified Hermite polynomial (real for real x, positive definite for
// even order), satisfying HM_{m+1} = 2 x HM_m + 2 m HM_{m-1}.
double modified_hermite(int m, double x);

// Rising factorial (a)_k as an explicit product. The product form keeps
// exact zeros when a is a non-positive integer, which Gamma-function
// ratios would turn into NaN.
double pochhammer(double a, int k);

struct log_signed {
  double log_abs;  // -infinity when the value is exactly zero
  double sign;     // +1, -1, or 0
};

// Overflow-safe rising factorial: (log|(a)_k|, sign (a)_k).
log_signed log_pochhammer(double a, int k);

// Generalized hypergeometric series 1F3(a; b1,b2,b3; x), summed until
// three consecutive terms fall below 1e-16 of the partial sum. Throws
// errc::parameter_pole when a lower parameter is a non-positive integer.
double hyp1f3(double a, double b1, double b2, double b3, double x);

// Normalized harmonic-oscillator eigenfunction
//   psi_n(x) = (sqrt(pi) 2^n n!)^{-1/2} e^{-x^2/2} H_n(x),
// evaluated by the normalized recurrence so arbitrarily high levels stay
// inside double range.
double hermite_function(int n, double x);

// Values psi_0(x) .. psi_nmax(x); out is resized to nmax + 1.
void hermite_function_table(int nmax, double x, std::vector<double>& out);

struct quadrature_policy {
  double half_width = 12.0;   // integrate over [-L, L]
  double panel_width = 0.5;   // composite Gauss-Legendre panel size
  int points_per_panel = 24;

  // Extent covering basis functions up to level nu_max: the classical
  // turning point sqrt(2 nu_max + 1) plus 8 units of Gaussian tail.
  static quadrature_policy for_max_level(long nu_max);
};

double integrate(const std::function<double(double)>& f,
                 const quadrature_policy& policy = {});

}  // namespace reho::specfun

#endif
