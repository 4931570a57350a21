#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qucouple/thermal_state.hpp"

using namespace qucouple;
using Catch::Approx;

TEST_CASE("partition function closed form", "[thermal]") {
  const EffectiveTwoQubit e{1.0, 1.0, 5.0};
  CHECK(partition_function(e, 1.0) == Approx(151.50605831920617644516802733).epsilon(1e-14));
  const auto x = xstate_elements(e, 1.0);
  CHECK(x.r23 == Approx(-74.2032105777887589770094719961).epsilon(1e-14));
  CHECK(x.r22 == Approx(x.r33).epsilon(1e-15));
}

TEST_CASE("Gibbs state agrees with the matrix exponential", "[thermal]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> t(0.2, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const EffectiveTwoQubit e{u(rng), u(rng), u(rng)};
    const double temp = t(rng);
    const auto h = effective_hamiltonian(e);
    const auto rho = gibbs_state(h, temp);
    const auto boltz = oracle::boltzmann_operator(h, temp);
    const double z = boltz.trace().real();
    CHECK(max_abs_diff(rho.matrix(), boltz * Complex(1.0 / z)) <= 1e-10);
    CHECK(*rho.partition_function() == Approx(z).epsilon(1e-10));
    CHECK(partition_function(e, temp) == Approx(z).epsilon(1e-10));

    const auto x = xstate_elements(e, temp);
    CHECK(boltz(0, 0).real() == Approx(x.r11).epsilon(1e-10));
    CHECK(boltz(1, 1).real() == Approx(x.r22).epsilon(1e-10));
    CHECK(boltz(2, 2).real() == Approx(x.r33).epsilon(1e-10));
    CHECK(boltz(3, 3).real() == Approx(x.r44).epsilon(1e-10));
    CHECK(boltz(1, 2).real() == Approx(x.r23).epsilon(1e-10).margin(1e-300));
  }
}

TEST_CASE("Gibbs state invariants on random Hermitian matrices", "[thermal]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = oracle::random_hermitian<8>(rng, 2.0);
    const auto rho = gibbs_state(h, 0.3 + 0.05 * trial);
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) <= 1e-12);
    CHECK(rho.matrix().hermiticity_defect() <= 1e-15);
    CHECK(oracle::eigenvalues(rho.matrix())[0] >= -1e-14);
    CHECK(commutator(rho.matrix(), h).norm() <= 1e-12 * h.norm());
  }
}

TEST_CASE("extreme temperatures", "[thermal]") {
  const auto h = effective_hamiltonian({1.0, 1.0, 5.0});
  // ground state (|01> - |10>)/sqrt2 at -5
  const auto cold = gibbs_state(h, 1e-3);
  CHECK(cold(1, 1).real() == Approx(0.5).epsilon(1e-12));
  CHECK(cold(1, 2).real() == Approx(-0.5).epsilon(1e-12));
  const auto hot = gibbs_state(h, 1e6);
  CHECK(hot(0, 0).real() == Approx(0.25).epsilon(1e-5));
  // huge energy spread does not overflow
  const auto big = gibbs_state(effective_hamiltonian({800.0, 800.0, 1.0}), 0.5);
  CHECK(big(3, 3).real() == Approx(1.0).epsilon(1e-12));
  CHECK(std::isfinite(*big.log_partition_function()));
}

TEST_CASE("zero-temperature limit mixes degenerate ground levels", "[thermal]") {
  const auto rho = gibbs_state(Matrix<4>::diagonal({0.0, 1.0, 0.0, 2.0}), 1e-9);
  CHECK(rho(0, 0).real() == 0.5);
  CHECK(rho(2, 2).real() == 0.5);
  CHECK(rho(1, 1).real() == 0.0);
}

TEST_CASE("temperature validation", "[thermal]") {
  const auto h = effective_hamiltonian({1.0, 1.0, 1.0});
  CHECK_THROWS_AS(gibbs_state(h, 0.0), DomainError);
  CHECK_THROWS_AS(gibbs_state(h, -1.0), DomainError);
  CHECK_THROWS_AS(partition_function({1.0, 1.0, 1.0}, std::nan("")), DomainError);
}

TEST_CASE("density matrix validation", "[thermal]") {
  Matrix<2> m = Matrix<2>::diagonal({0.7, 0.3});
  CHECK_NOTHROW(DensityMatrix<2>::from_matrix(m));
  CHECK_THROWS_AS(DensityMatrix<2>::from_matrix(Matrix<2>::diagonal({0.7, 0.4})), DomainError);
  CHECK_THROWS_AS(DensityMatrix<2>::from_matrix(Matrix<2>::diagonal({1.2, -0.2})), DomainError);
  Matrix<2> n = m;
  n(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix<2>::from_matrix(n), DomainError);
}

TEST_CASE("pure state completion and sqrt", "[thermal]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = oracle::random_state<4>(rng);
    const auto rho = DensityMatrix<4>::pure(psi);
    CHECK(rho.purity() == 1.0);
    CHECK(max_abs_diff(rho.sqrt(), rho.matrix()) <= 1e-14);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(std::abs(inner(rho.states()[i], rho.states()[j]) - Complex(i == j ? 1.0 : 0.0)) <= 1e-14);
  }
}

TEST_CASE("sqrt of a generic state squares back", "[thermal]") {
  std::mt19937_64 rng(8);
  const auto rho = DensityMatrix<4>::from_matrix(oracle::random_density<4>(rng));
  const auto r = rho.sqrt();
  CHECK(max_abs_diff(r * r, rho.matrix()) <= 1e-14);
  CHECK(rho.purity() < 1.0);
}
