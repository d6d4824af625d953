#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ladder.hpp"
#include "spectrum.hpp"

using namespace reho;
using ladder::coefficient_vector;
using ladder::ladder_kind;

namespace {

double real_amplitude(const coefficient_vector& v, std::size_t k) {
  const std::complex<double> a = v.amplitude(k);
  CHECK(std::fabs(a.imag()) < 1e-14 * std::max(1.0, std::fabs(a.real())));
  return a.real();
}

coefficient_vector random_vector(ladder_kind kind, std::size_t size,
                                 std::mt19937& rng) {
  std::uniform_real_distribution<double> mag(-3.0, 0.0);
  std::uniform_real_distribution<double> phase(0.0, 6.28);
  std::vector<ladder::log_polar> entries(size);
  for (auto& e : entries) e = {mag(rng), phase(rng)};
  coefficient_vector v(kind, std::move(entries));
  v.normalize();
  return v;
}

}  // namespace

TEST_CASE("ladder kinds validate mu and map levels") {
  CHECK_THROWS_AS(ladder_kind::make_c(0), const error&);
  CHECK_THROWS_AS(ladder_kind::make_ctilde(-2), const error&);
  const ladder_kind c = ladder_kind::make_c(-3);
  CHECK(c.level_of(0) == -3);
  CHECK(c.level_of(2) == 3);
  const ladder_kind a = ladder_kind::make_a();
  CHECK(a.level_of(5) == 5);
  // the three subspaces never share a level
  for (long k1 = 0; k1 <= 60; ++k1) {
    for (long k2 = 0; k2 <= 60; ++k2) {
      CHECK(-3 + 3 * k1 != 1 + 3 * k2);
      CHECK(-3 + 3 * k1 != 2 + 3 * k2);
      CHECK(1 + 3 * k1 != 2 + 3 * k2);
    }
  }
}

TEST_CASE("coefficient vectors normalize in log space") {
  std::vector<ladder::log_polar> entries{{-800.0, 0.0}, {-800.0, 1.0}};
  coefficient_vector v(ladder_kind::make_a(), std::move(entries));
  CHECK(v.norm_squared() < 1e-300);  // raw weights underflow
  v.normalize();
  CHECK(v.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v.weight(0) == doctest::Approx(0.5));
}

TEST_CASE("oscillator lowering and raising") {
  const auto one = coefficient_vector::basis_vector(ladder_kind::make_a(), 1, 3);
  const auto lowered = ladder::lower_a(one);
  CHECK(lowered.dropped_weight == 0.0);
  CHECK(real_amplitude(lowered.state, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(lowered.state.weight(1) == 0.0);

  const auto ground = coefficient_vector::basis_vector(ladder_kind::make_a(), 0, 2);
  CHECK(ladder::lower_a(ground).state.norm_squared() == 0.0);

  // raise then lower on level 2: a a^dag eigenvalue 2 nu + 2 = 6
  const auto two = coefficient_vector::basis_vector(ladder_kind::make_a(), 2, 3);
  const auto round_trip = ladder::lower_a(ladder::raise_a(two).state);
  CHECK(real_amplitude(round_trip.state, 2) == doctest::Approx(6.0));
}

TEST_CASE("raising past a cap reports the dropped weight") {
  const auto top = coefficient_vector::basis_vector(ladder_kind::make_a(), 2, 3);
  const auto capped = ladder::raise_a(top, 3);
  CHECK(capped.state.size() == 3);
  CHECK(capped.state.norm_squared() == 0.0);
  CHECK(capped.dropped_weight == doctest::Approx(6.0));  // |sqrt(2*3)|^2

  const auto uncapped = ladder::raise_a(top);
  CHECK(uncapped.state.size() == 4);
  CHECK(uncapped.dropped_weight == 0.0);
}

TEST_CASE("step-3 lowering reproduces the matrix action") {
  const ladder_kind kind = ladder_kind::make_c(-3);
  // level 3 lives at slot 2 of the mu = -3 subspace
  const auto three = coefficient_vector::basis_vector(kind, 2, 3);
  const auto lowered = ladder::lower_c(three, -3);
  CHECK(real_amplitude(lowered.state, 1) == doctest::Approx(-std::sqrt(96.0)));

  const auto zero_level = coefficient_vector::basis_vector(kind, 1, 2);
  const auto to_ground = ladder::lower_c(zero_level, -3);
  CHECK(real_amplitude(to_ground.state, 0) == doctest::Approx(-std::sqrt(48.0)));

  // the three lowest-weight states are annihilated
  for (int mu : {-3, 1, 2}) {
    const auto lowest =
        coefficient_vector::basis_vector(ladder_kind::make_c(mu), 0, 2);
    CHECK(ladder::lower_c(lowest, mu).state.norm_squared() == 0.0);
  }
}

TEST_CASE("step-3 raising and the adjoint relation") {
  const ladder_kind kind = ladder_kind::make_c(-3);
  const auto ground = coefficient_vector::basis_vector(kind, 0, 1);
  const auto raised = ladder::raise_c(ground, -3);
  CHECK(real_amplitude(raised.state, 1) == doctest::Approx(-std::sqrt(48.0)));

  const auto zero_level = coefficient_vector::basis_vector(kind, 1, 2);
  CHECK(real_amplitude(ladder::raise_c(zero_level, -3).state, 2) ==
        doctest::Approx(-std::sqrt(96.0)));

  // <k+1| c^dag |k> == <k| c |k+1> on every subspace up to level 12
  for (int mu : {-3, 1, 2}) {
    const ladder_kind k_mu = ladder_kind::make_c(mu);
    for (std::size_t k = 0; k_mu.level_of(k + 1) <= 15; ++k) {
      const auto lower_side = ladder::lower_c(
          coefficient_vector::basis_vector(k_mu, k + 1, k + 2), mu);
      const auto raise_side = ladder::raise_c(
          coefficient_vector::basis_vector(k_mu, k, k + 2), mu);
      CHECK(real_amplitude(raise_side.state, k + 1) ==
            doctest::Approx(real_amplitude(lower_side.state, k)).epsilon(1e-14));
    }
  }
}

TEST_CASE("linearized ladder carries the oscillator action") {
  const ladder_kind kind = ladder_kind::make_ctilde(-3);
  const auto kappa1 = coefficient_vector::basis_vector(kind, 1, 2);
  const auto lowered = ladder::lower_ctilde(kappa1, -3);
  CHECK(real_amplitude(lowered.state, 0) == doctest::Approx(std::sqrt(2.0)));

  const auto kappa0 = coefficient_vector::basis_vector(kind, 0, 2);
  CHECK(ladder::lower_ctilde(kappa0, -3).state.norm_squared() == 0.0);

  // rescaling relation against the un-linearized operator
  for (int mu : {-3, 1, 2}) {
    for (std::size_t kappa = 1; kappa <= 6; ++kappa) {
      const auto basis = coefficient_vector::basis_vector(
          ladder_kind::make_ctilde(mu), kappa, kappa + 1);
      const double tilde =
          real_amplitude(ladder::lower_ctilde(basis, mu).state, kappa - 1);
      const double plain = real_amplitude(ladder::lower_c(basis, mu).state, kappa - 1);
      const long nu = mu + 3 * static_cast<long>(kappa);
      const double scale =
          -std::sqrt(2.0 * kappa) /
          std::sqrt(8.0 * (nu - 1.0) * (nu - 2.0) * (nu + 3.0));
      CHECK(tilde == doctest::Approx(scale * plain).epsilon(1e-13));
    }
  }
}

TEST_CASE("mismatched subspaces are rejected") {
  const auto a_state = coefficient_vector::basis_vector(ladder_kind::make_a(), 0, 2);
  CHECK_THROWS_AS(ladder::lower_c(a_state, -3), const error&);
  const auto c_state =
      coefficient_vector::basis_vector(ladder_kind::make_c(1), 0, 2);
  try {
    ladder::lower_c(c_state, 2);
    FAIL("expected a ladder mismatch");
  } catch (const error& e) {
    CHECK(e.code() == errc::ladder_mismatch);
  }
  CHECK_THROWS_AS(ladder::lower_ctilde(c_state, 4), const error&);
}

TEST_CASE("cubic algebra eigenvalues") {
  CHECK(ladder::q_polynomial(0.0) == 0.0);
  CHECK(ladder::q_polynomial(8.0) == 0.0);
  CHECK(ladder::q_polynomial(10.0) == 0.0);

  CHECK(ladder::commutator_cc_dagger_eigenvalue(-3) == doctest::Approx(48.0));
  CHECK(ladder::commutator_cc_dagger_eigenvalue(0) == doctest::Approx(48.0));
  CHECK_THROWS_AS(ladder::commutator_cc_dagger_eigenvalue(-2), const error&);

  // cross-check against ||c^dag|nu>||^2 - ||c|nu>||^2 on basis vectors
  for (int mu : {-3, 1, 2}) {
    const ladder_kind kind = ladder_kind::make_c(mu);
    for (std::size_t k = 0; kind.level_of(k) <= 20; ++k) {
      const auto basis = coefficient_vector::basis_vector(kind, k, k + 2);
      const double up = ladder::raise_c(basis, mu).state.norm_squared();
      const double down = ladder::lower_c(basis, mu).state.norm_squared();
      const double expected =
          ladder::commutator_cc_dagger_eigenvalue(kind.level_of(k));
      CHECK(up - down == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("raising shifts the energy by exactly 6") {
  for (int mu : {-3, 1, 2}) {
    const ladder_kind kind = ladder_kind::make_c(mu);
    for (std::size_t k = 0; k <= 4; ++k) {
      auto raised = ladder::raise_c(
          coefficient_vector::basis_vector(kind, k, k + 2), mu);
      raised.state.normalize();
      const double before = spectrum::energy(spectrum::system_tag::minus,
                                             kind.level_of(k));
      double after = 0.0;
      for (std::size_t j = 0; j < raised.state.size(); ++j) {
        after += raised.state.weight(j) *
                 spectrum::energy(spectrum::system_tag::minus, kind.level_of(j));
      }
      CHECK(after - before == doctest::Approx(6.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("differential chain reproduces the step-3 matrix action") {
  std::vector<double> xs;
  for (double x = -7.0; x <= 7.0 + 1e-12; x += 0.05) {
    if (std::fabs(x) >= 0.25) xs.push_back(x);
  }

  for (long nu : {3L, 4L, 5L, 6L}) {
    const auto got = ladder::apply_c_differential(nu, xs);
    const double factor = -std::sqrt(8.0 * (nu - 1.0) * (nu - 2.0) * (nu + 3.0));
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double want = factor * spectrum::eigenfunction_minus(nu - 3, xs[i]);
      num += (got[i] - want) * (got[i] - want);
      den += want * want;
    }
    CHECK(std::sqrt(num / den) < 1e-5);
  }
}

TEST_CASE("differential chain annihilates the lowest-weight states") {
  std::vector<double> xs;
  for (double x = -6.0; x <= 6.0 + 1e-12; x += 0.1) {
    if (std::fabs(x) >= 0.25) xs.push_back(x);
  }
  for (long nu : {-3L, 1L, 2L}) {
    const auto got = ladder::apply_c_differential(nu, xs);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double ref = spectrum::eigenfunction_minus(nu, xs[i]);
      num += got[i] * got[i];
      den += ref * ref;
    }
    CHECK(std::sqrt(num / den) < 1e-5);
  }
}

TEST_CASE("lowering and raising are mutually adjoint on random states") {
  std::mt19937 rng(20240817);
  for (int mu : {-3, 1, 2}) {
    const ladder_kind kind = ladder_kind::make_c(mu);
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = random_vector(kind, 12, rng);
      const auto w = random_vector(kind, 12, rng);
      // <v, c^dag w> == <c v, w>
      const auto lhs = inner_product(v, ladder::raise_c(w, mu).state);
      const auto rhs = inner_product(ladder::lower_c(v, mu).state, w);
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
  // same relation for the linearized pair
  const ladder_kind kind = ladder_kind::make_ctilde(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_vector(kind, 9, rng);
    const auto w = random_vector(kind, 9, rng);
    const auto lhs = inner_product(v, ladder::raise_ctilde(w, 1).state);
    const auto rhs = inner_product(ladder::lower_ctilde(v, 1).state, w);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("commutator acts diagonally on random states") {
  std::mt19937 rng(7);
  for (int mu : {-3, 2}) {
    const ladder_kind kind = ladder_kind::make_c(mu);
    const auto v = random_vector(kind, 10, rng);
    const auto down_up = ladder::raise_c(ladder::lower_c(v, mu).state, mu).state;
    const auto up_down = ladder::lower_c(ladder::raise_c(v, mu).state, mu).state;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const auto commutator = up_down.amplitude(k) - down_up.amplitude(k);
      const auto expected =
          ladder::commutator_cc_dagger_eigenvalue(kind.level_of(k)) * v.amplitude(k);
      CHECK(std::abs(commutator - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("differential chain refuses the singular region") {
  const std::vector<double> xs{0.5, 0.1, 1.0};
  try {
    ladder::apply_c_differential(3, xs);
    FAIL("expected a singular region error");
  } catch (const error& e) {
    CHECK(e.code() == errc::singular_region);
  }
}
