#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "reho.h"

namespace {

struct state_guard {
  reho_state* ptr = nullptr;
  ~state_guard() { reho_state_free(ptr); }
};

}  // namespace

TEST_CASE("library identifies itself") {
  CHECK(std::strlen(reho_version()) > 0);
  CHECK(std::string(reho_status_name(REHO_OK)) == "ok");
  CHECK(std::string(reho_status_name(REHO_ERROR_BAD_MU)) == "bad mu");
}

TEST_CASE("coherent state construction and observables") {
  state_guard s;
  REQUIRE(reho_coherent_state(REHO_LADDER_A, 0, 15.0, 0.0, 0, &s.ptr) == REHO_OK);
  CHECK(reho_state_size(s.ptr) >= 230);

  double energy = 0.0;
  REQUIRE(reho_state_energy(s.ptr, &energy) == REHO_OK);
  CHECK(energy == doctest::Approx(231.0).epsilon(1e-10));

  double residual = 0.0;
  REQUIRE(reho_state_eigen_residual(s.ptr, &residual) == REHO_OK);
  CHECK(residual < 1e-10);

  long level = 0;
  double log_mag = 0.0;
  double phase = 0.0;
  REQUIRE(reho_state_coefficient(s.ptr, 3, &level, &log_mag, &phase) == REHO_OK);
  CHECK(level == 3);
  CHECK(std::isfinite(log_mag));
  CHECK(phase == 0.0);
  CHECK(reho_state_coefficient(s.ptr, reho_state_size(s.ptr), &level, &log_mag,
                               &phase) == REHO_ERROR_BAD_INDEX);
}

TEST_CASE("subspace levels step by three") {
  state_guard s;
  REQUIRE(reho_coherent_state(REHO_LADDER_CTILDE, -3, 4.0, 0.0, 0, &s.ptr) == REHO_OK);
  for (std::size_t k = 0; k < std::min<std::size_t>(reho_state_size(s.ptr), 6); ++k) {
    long level = 0;
    REQUIRE(reho_state_coefficient(s.ptr, k, &level, nullptr, nullptr) == REHO_OK);
    CHECK(level == -3 + 3 * static_cast<long>(k));
  }
}

TEST_CASE("density buffers are filled and normalized") {
  state_guard s;
  REQUIRE(reho_coherent_state(REHO_LADDER_A, 0, 2.0, 0.0, 0, &s.ptr) == REHO_OK);

  const std::size_t nx = 2001;
  std::vector<double> xs(nx);
  REQUIRE(reho_grid_linspace(-20.0, 20.0, nx, xs.data()) == REHO_OK);
  CHECK(xs[nx / 2] == 0.0);

  std::vector<double> rho(nx);
  REQUIRE(reho_state_density(s.ptr, 0.0, xs.data(), nx, rho.data()) == REHO_OK);
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < nx; ++i) {
    integral += 0.5 * (rho[i] + rho[i + 1]) * (xs[i + 1] - xs[i]);
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));

  const double times[2] = {0.0, 0.4};
  std::vector<double> field(2 * nx);
  REQUIRE(reho_state_density_field(s.ptr, times, 2, xs.data(), nx, field.data()) ==
          REHO_OK);
  for (std::size_t i = 0; i < nx; ++i) {
    CHECK(field[i] == rho[i]);
    CHECK(field[nx + i] >= 0.0);
  }

  std::size_t peaks = 0;
  REQUIRE(reho_density_peaks(xs.data(), rho.data(), nx, 0.02, 0.5, &peaks) == REHO_OK);
  CHECK(peaks == 1);
}

TEST_CASE("closed forms and overlaps through the C surface") {
  double period = 0.0;
  REQUIRE(reho_density_period(REHO_LADDER_A, &period) == REHO_OK);
  CHECK(period == doctest::Approx(3.14159265358979324));
  REQUIRE(reho_density_period(REHO_LADDER_CTILDE, &period) == REHO_OK);
  CHECK(period == doctest::Approx(3.14159265358979324 / 3.0));

  double d = 0.0;
  REQUIRE(reho_overlap(REHO_LADDER_A, 0, 3.0, &d) == REHO_OK);
  CHECK(d == doctest::Approx(std::exp(-9.0)).epsilon(1e-13));

  double energy = 0.0;
  REQUIRE(reho_energy_closed_form(REHO_LADDER_CTILDE, 2, 15.0, &energy) == REHO_OK);
  CHECK(energy == doctest::Approx(6.0 + 4.0 + 675.0));
}

TEST_CASE("cat states and their failure modes") {
  state_guard odd;
  REQUIRE(reho_cat_state(REHO_LADDER_C, -3, 15.0, 0.0, REHO_PARITY_ODD, 0,
                         &odd.ptr) == REHO_OK);
  const double origin = 0.0;
  double value = 1.0;
  REQUIRE(reho_state_density(odd.ptr, 0.1, &origin, 1, &value) == REHO_OK);
  CHECK(value <= 1e-10);

  double residual = 0.0;
  CHECK(reho_state_eigen_residual(odd.ptr, &residual) == REHO_ERROR_BAD_ARGUMENT);

  reho_state* bad = nullptr;
  CHECK(reho_cat_state(REHO_LADDER_A, 0, 0.0, 0.0, REHO_PARITY_ODD, 0, &bad) ==
        REHO_ERROR_DEGENERATE_CAT);
  CHECK(bad == nullptr);
  CHECK(std::strlen(reho_last_error()) > 0);
}

TEST_CASE("error codes cover the configuration space") {
  reho_state* out = nullptr;
  CHECK(reho_coherent_state(REHO_LADDER_C, 7, 1.0, 0.0, 0, &out) == REHO_ERROR_BAD_MU);
  CHECK(reho_coherent_state(REHO_LADDER_A, 0, 100.0, 0.0, 40, &out) ==
        REHO_ERROR_TRUNCATION_CAP);
  CHECK(out == nullptr);
  double d = 0.0;
  CHECK(reho_overlap(REHO_LADDER_C, 0, 1.0, &d) == REHO_ERROR_BAD_MU);
  CHECK(reho_overlap(REHO_LADDER_A, 0, -1.0, &d) == REHO_ERROR_BAD_ARGUMENT);
  CHECK(reho_state_density(nullptr, 0.0, &d, 1, &d) == REHO_ERROR_BAD_ARGUMENT);
}
