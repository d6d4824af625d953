#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

namespace reho::specfun {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_nonpositive_integer(double b) {
  return b <= 0.0 && b == std::floor(b);
}

}  // namespace

double hermite(int n, double x) {
  if (n < 0) throw error(errc::bad_index, "hermite: order must be non-negative");
  double hm1 = 0.0;
  double h = 1.0;
  for (int m = 0; m < n; ++m) {
    const double hp1 = 2.0 * x * h - 2.0 * m * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

double modified_hermite(int m, double x) {
  if (m < 0) throw error(errc::bad_index, "modified_hermite: order must be non-negative");
  double hm1 = 0.0;
  double h = 1.0;
  for (int j = 0; j < m; ++j) {
    const double hp1 = 2.0 * x * h + 2.0 * j * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

double pochhammer(double a, int k) {
  if (k < 0) throw error(errc::bad_index, "pochhammer: k must be non-negative");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

log_signed log_pochhammer(double a, int k) {
  if (k < 0) throw error(errc::bad_index, "log_pochhammer: k must be non-negative");
  double log_abs = 0.0;
  double sign = 1.0;
  for (int i = 0; i < k; ++i) {
    const double factor = a + i;
    if (factor == 0.0) return {kNegInf, 0.0};
    if (factor < 0.0) sign = -sign;
    log_abs += std::log(std::fabs(factor));
  }
  return {log_abs, sign};
}

double hyp1f3(double a, double b1, double b2, double b3, double x) {
  for (double b : {b1, b2, b3}) {
    if (is_nonpositive_integer(b)) {
      throw error(errc::parameter_pole,
                  "hyp1f3: lower parameter is a non-positive integer");
    }
  }
  double term = 1.0;
  double sum = 1.0;
  int consecutive_small = 0;
  // Three consecutive sub-threshold terms are required because a single
  // term can transiently dip when a Pochhammer factor crosses a small value.
  for (long n = 0; consecutive_small < 3; ++n) {
    term *= x * (a + n) / ((b1 + n) * (b2 + n) * (b3 + n) * (n + 1.0));
    sum += term;
    if (std::fabs(term) < 1e-16 * std::fabs(sum)) {
      ++consecutive_small;
    } else {
      consecutive_small = 0;
    }
    if (n > 1000000) {
      throw error(errc::bad_argument, "hyp1f3: series failed to converge");
    }
  }
  return sum;
}

double hermite_function(int n, double x) {
  if (n < 0) throw error(errc::bad_index, "hermite_function: negative level");
  const double pi_quarter = std::pow(std::numbers::pi, -0.25);
  double fm1 = 0.0;
  double f = pi_quarter * std::exp(-0.5 * x * x);
  for (int m = 0; m < n; ++m) {
    const double fp1 =
        x * std::sqrt(2.0 / (m + 1.0)) * f - std::sqrt(m / (m + 1.0)) * fm1;
    fm1 = f;
    f = fp1;
  }
  return f;
}

void hermite_function_table(int nmax, double x, std::vector<double>& out) {
  if (nmax < 0) throw error(errc::bad_index, "hermite_function_table: negative level");
  out.resize(static_cast<std::size_t>(nmax) + 1);
  out[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (nmax >= 1) out[1] = x * std::sqrt(2.0) * out[0];
  for (int n = 1; n < nmax; ++n) {
    out[n + 1] =
        x * std::sqrt(2.0 / (n + 1.0)) * out[n] - std::sqrt(n / (n + 1.0)) * out[n - 1];
  }
}

quadrature_policy quadrature_policy::for_max_level(long nu_max) {
  quadrature_policy policy;
  policy.half_width =
      std::max(12.0, std::sqrt(2.0 * static_cast<double>(nu_max) + 1.0) + 8.0);
  return policy;
}

namespace {

struct gauss_rule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on the Legendre recurrence.
gauss_rule build_gauss_rule(int n) {
  gauss_rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const gauss_rule& cached_gauss_rule(int n) {
  static std::mutex mutex;
  static std::map<int, gauss_rule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_rule(n)).first;
  return it->second;
}

}  // namespace

double integrate(const std::function<double(double)>& f,
                 const quadrature_policy& policy) {
  if (policy.half_width <= 0.0 || policy.panel_width <= 0.0 ||
      policy.points_per_panel < 2) {
    throw error(errc::bad_argument, "integrate: invalid quadrature policy");
  }
  const gauss_rule& rule = cached_gauss_rule(policy.points_per_panel);
  const int n_panels = std::max(
      1, static_cast<int>(std::ceil(2.0 * policy.half_width / policy.panel_width)));
  const double width = 2.0 * policy.half_width / n_panels;
  double total = 0.0;
  for (int p = 0; p < n_panels; ++p) {
    const double a = -policy.half_width + p * width;
    const double mid = a + 0.5 * width;
    const double half = 0.5 * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    total += panel * half;
  }
  return total;
}

}  // namespace reho::specfun
