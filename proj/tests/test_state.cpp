#include <doctest.h>

#include <cmath>

#include "qteleport/protocol.hpp"
#include "qteleport/state.hpp"
#include "test_support.hpp"

using namespace qteleport;

TEST_CASE("Ket normalization") {
  CHECK_NOTHROW(Ket({0.6, Complex(0.0, 0.8)}));
  CHECK_THROWS_AS(Ket({1.0, 1.0}), std::invalid_argument);
  const Ket k({1.0, 1.0}, Normalize::kRenormalize);
  CHECK(std::abs(k[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS_AS(Ket({0.0, 0.0}, Normalize::kRenormalize), std::invalid_argument);
  CHECK_THROWS_AS(QubitState(0.7, 0.7), std::invalid_argument);
  CHECK_NOTHROW(QubitState(0.6, 0.8 + 1e-10));
}

TEST_CASE("ket_to_density") {
  CHECK(ket_to_density(Ket::basis(2, 0)).matrix() == ComplexMatrix{{1, 0}, {0, 0}});

  const ComplexMatrix b1 = ket_to_density(bell_basis().at(1)).matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
      CHECK(std::abs(b1(i, j) - (corner ? 0.5 : 0.0)) <= 1e-15);
    }

  const Complex a(0.6, 0.0), b(0.0, 0.8);
  const ComplexMatrix sigma{{std::norm(a), a * std::conj(b)}, {std::conj(a) * b, std::norm(b)}};
  CHECK(approx_eq(ket_to_density(QubitState(a, b).ket()).matrix(), sigma, 1e-15));
}

TEST_CASE("purity") {
  CHECK(purity(ket_to_density(Ket::basis(4, 2))) == doctest::Approx(1.0));
  CHECK(purity(validate_density(testing::equal_mixture(4))) == doctest::Approx(0.25));
  const QubitState psi(0.6, Complex(0.0, 0.8));
  const DensityMatrix out = teleport_channel(build_initial_state(psi, 1), kraus_set(1));
  CHECK(std::abs(purity(out) - 0.25) <= 1e-12);
}

TEST_CASE("fidelity_pure") {
  const Ket psi({0.6, Complex(0.0, 0.8)});
  CHECK(fidelity_pure(psi, ket_to_density(psi)) == doctest::Approx(1.0));
  CHECK(fidelity_pure(Ket::basis(2, 0), ket_to_density(Ket::basis(2, 1))) == doctest::Approx(0.0));
  CHECK(fidelity_pure(Ket::basis(2, 0), validate_density(testing::equal_mixture(2))) == doctest::Approx(0.5));
  CHECK_THROWS_AS(fidelity_pure(Ket::basis(4, 0), ket_to_density(psi)), DimensionError);
}

TEST_CASE("von_neumann_entropy") {
  CHECK(std::abs(von_neumann_entropy(ket_to_density(Ket({0.6, 0.8})))) <= 1e-12);
  CHECK(von_neumann_entropy(validate_density(testing::equal_mixture(2))) == doctest::Approx(1.0));
  const QubitState psi(0.6, 0.8);
  const DensityMatrix out = teleport_channel(build_initial_state(psi, 1), kraus_set(1));
  CHECK(std::abs(von_neumann_entropy(out) - 2.0) <= 1e-10);
}

TEST_CASE("validate_density") {
  CHECK_NOTHROW(validate_density(testing::equal_mixture(8)));

  auto kind_of = [](const ComplexMatrix& m) {
    try {
      validate_density(m);
    } catch (const DensityError& e) {
      return e.kind();
    }
    FAIL("expected DensityError");
    return DensityError::Kind::kNotSquare;
  };
  CHECK(kind_of(gates::pauli_x()) == DensityError::Kind::kTraceNotOne);
  CHECK(kind_of(ComplexMatrix{{2, 0}, {0, -1}}) == DensityError::Kind::kNotPositive);
  CHECK(kind_of(ComplexMatrix{{0.5, 0.5}, {0, 0.5}}) == DensityError::Kind::kNotHermitian);

  try {
    validate_density(ComplexMatrix{{2, 0}, {0, -1}});
  } catch (const DensityError& e) {
    CHECK(e.violation() == doctest::Approx(-1.0));
  }
}

TEST_CASE("state properties over random kets") {
  std::mt19937_64 rng(2024);
  for (int n = 0; n < 1000; ++n) {
    const Ket k = random_ket(1 + n % 8, rng);
    const DensityMatrix rho = ket_to_density(k);
    CHECK_NOTHROW(validate_density(rho.matrix()));
    CHECK(std::abs(purity(rho) - 1.0) <= 1e-10);
    CHECK(std::abs(fidelity_pure(k, rho) - 1.0) <= 1e-10);
  }
}

TEST_CASE("entropy is invariant under unitary conjugation") {
  std::mt19937_64 rng(99);
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = random_density(8, rng);
    const ComplexMatrix u = eig_hermitian(testing::random_hermitian(8, rng)).vectors;
    const DensityMatrix rotated = validate_density(u * rho.matrix() * dagger(u));
    CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) <= 1e-9);
  }
}
