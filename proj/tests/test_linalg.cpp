#include <doctest.h>

#include <cmath>

#include "qteleport/linalg.hpp"
#include "qteleport/protocol.hpp"
#include "qteleport/tables.hpp"
#include "test_support.hpp"

using namespace qteleport;
using qteleport::testing::random_hermitian;
using qteleport::testing::random_matrix;

namespace {
const Complex kI{0.0, 1.0};
const ComplexMatrix kId2 = ComplexMatrix::identity(2);
}  // namespace

TEST_CASE("matmul") {
  CHECK(matmul(kId2, gates::pauli_x()) == gates::pauli_x());
  CHECK(matmul(gates::pauli_x(), gates::pauli_x()) == kId2);
  // sigma_x sigma_z = [[0,-1],[1,0]] worked out by hand; that is -i sigma_y.
  const ComplexMatrix by_hand{{0, -1}, {1, 0}};
  CHECK(approx_eq(matmul(gates::pauli_x(), gates::pauli_z()), by_hand, 0.0));
  CHECK(approx_eq(matmul(gates::pauli_x(), gates::pauli_z()), -kI * gates::pauli_y(), 0.0));
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("kron") {
  CHECK(kron(kId2, kId2) == ComplexMatrix::identity(4));
  CHECK(kron(kron(kId2, kId2), gates::pauli_x()) == tables::correction_operator(2));

  const ComplexMatrix ket0{{1}, {0}};
  const ComplexMatrix ket1{{0}, {1}};
  const ComplexMatrix v = kron(ket0, ket1);
  REQUIRE(v.rows() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(v(i, 0) == Complex(i == 1 ? 1.0 : 0.0));

  SUBCASE("associativity is exact on integer entries") {
    const ComplexMatrix a{{1, 2}, {3, -1}};
    const ComplexMatrix b{{0, 1, 2}, {4, 0, -2}};
    const ComplexMatrix c{{2}, {-3}};
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
  SUBCASE("random properties") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 50; ++n) {
      const ComplexMatrix a = random_matrix(2, 2, rng);
      const ComplexMatrix b = random_matrix(3, 3, rng);
      const ComplexMatrix c = random_matrix(2, 2, rng);
      CHECK(approx_eq(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-12));
      CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) <= 1e-12);
      CHECK(approx_eq(dagger(kron(a, b)), kron(dagger(a), dagger(b)), 1e-12));
    }
  }
}

TEST_CASE("dagger") {
  CHECK(dagger(ComplexMatrix::identity(4)) == ComplexMatrix::identity(4));
  const ComplexMatrix& b4 = tables::correction_operator(4);
  CHECK(dagger(b4) * b4 == ComplexMatrix::identity(8));
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_matrix(3, 5, rng);
  CHECK(dagger(dagger(a)) == a);
  CHECK(dagger(a).rows() == 5);
}

TEST_CASE("trace") {
  CHECK(trace(ComplexMatrix::identity(8)) == Complex(8.0));
  CHECK(trace(gates::pauli_x()) == Complex(0.0));
  CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("matrix construction rejects bad input") {
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0.0, INFINITY)}), std::invalid_argument);
}

TEST_CASE("factorization digits are big-endian") {
  const Factorization f = Factorization::qubits(3);
  CHECK(f.total() == 8);
  CHECK(f.digits(3) == std::vector<std::size_t>{0, 1, 1});
  CHECK(f.digits(4) == std::vector<std::size_t>{1, 0, 0});
  const Factorization g({2, 3});
  CHECK(g.digits(5) == std::vector<std::size_t>{1, 2});
  const std::vector<std::size_t> d{1, 2};
  CHECK(g.index(d) == 5);
  CHECK_THROWS(Factorization({2, 0}));
}

TEST_CASE("partial_trace") {
  const ComplexMatrix bell = ket_to_density(bell_basis().at(1)).matrix();
  const ComplexMatrix half_id = 0.5 * kId2;
  CHECK(approx_eq(partial_trace(bell, Factorization::qubits(2), {0}), half_id, 1e-15));

  std::mt19937_64 rng(5);
  SUBCASE("product state on [2,4]") {
    const DensityMatrix a = random_density(2, rng);
    const DensityMatrix b = random_density(4, rng);
    const ComplexMatrix ab = kron(a.matrix(), b.matrix());
    const Factorization f({2, 4});
    CHECK(approx_eq(partial_trace(ab, f, {1}), b.matrix(), 1e-12));
    CHECK(approx_eq(partial_trace(ab, f, {0}), a.matrix(), 1e-12));
  }
  SUBCASE("keeping everything or tracing everything") {
    const ComplexMatrix m = random_matrix(8, 8, rng);
    const Factorization f = Factorization::qubits(3);
    CHECK(approx_eq(partial_trace(m, f, {2, 0, 1}), m, 0.0));
    // Tracing out every factor is the ordinary trace; the library keeps at
    // least one factor, so chain two reductions.
    const ComplexMatrix last = partial_trace(partial_trace(m, f, {0}), Factorization::qubits(1), {0});
    CHECK(std::abs(trace(last) - trace(m)) <= 1e-12);
  }
  SUBCASE("first-factor reduction of a product is scaled by the trace of the rest") {
    for (int n = 0; n < 20; ++n) {
      const ComplexMatrix a = random_matrix(2, 2, rng);
      const ComplexMatrix b = random_matrix(4, 4, rng);
      CHECK(approx_eq(partial_trace(kron(a, b), Factorization({2, 4}), {0}), trace(b) * a, 1e-12));
    }
  }
  SUBCASE("agrees with the sandwich oracle for every keep set") {
    const std::vector<std::size_t> dims{2, 3, 2};
    const Factorization f(dims);
    const ComplexMatrix m = random_matrix(12, 12, rng);
    const std::vector<std::vector<std::size_t>> keeps{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    for (const auto& keep : keeps) {
      CHECK(approx_eq(partial_trace(m, f, keep), testing::sandwich_partial_trace(m, dims, keep), 1e-12));
    }
  }
  SUBCASE("errors") {
    const ComplexMatrix m = random_matrix(8, 8, rng);
    CHECK_THROWS_AS(partial_trace(m, Factorization::qubits(2), {0}), DimensionError);
    CHECK_THROWS_AS(partial_trace(m, Factorization::qubits(3), {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(m, Factorization::qubits(3), {3}), std::out_of_range);
  }
}

TEST_CASE("eig_hermitian") {
  SUBCASE("simple spectra") {
    const auto z = eig_hermitian(gates::pauli_z());
    CHECK(z.values[0] == doctest::Approx(1.0));
    CHECK(z.values[1] == doctest::Approx(-1.0));
    for (double v : eig_hermitian(ComplexMatrix::identity(8)).values) CHECK(v == doctest::Approx(1.0));
  }
  SUBCASE("teleported output has four eigenvalues 1/4 and a 4-dim null space") {
    const double h = 1.0 / std::sqrt(2.0);
    const QubitState psi(h, Complex(0.0, h));
    const DensityMatrix out = teleport_channel(build_initial_state(psi, 1), kraus_set(1));
    const auto e = eig_hermitian(out.matrix());
    for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(e.values[k] - (k < 4 ? 0.25 : 0.0)) <= 1e-12);
    // Spectral projector of the 1/4 cluster must be 4 * rho_out.
    ComplexMatrix proj(8, 8);
    for (std::size_t k = 0; k < 4; ++k) {
      ComplexMatrix col(8, 1);
      for (std::size_t r = 0; r < 8; ++r) col(r, 0) = e.vectors(r, k);
      proj = proj + col * dagger(col);
    }
    CHECK(approx_eq(proj, 4.0 * out.matrix(), 1e-10));
  }
  SUBCASE("random Hermitian reconstruction") {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 200; ++n) {
      const ComplexMatrix h = random_hermitian(8, rng);
      const auto e = eig_hermitian(h);
      std::vector<Complex> diag(e.values.begin(), e.values.end());
      const ComplexMatrix recon = e.vectors * ComplexMatrix::diagonal(diag) * dagger(e.vectors);
      CHECK(max_abs_diff(recon, h) <= 1e-10);
      CHECK(is_unitary(e.vectors, 1e-10));
      for (std::size_t k = 1; k < e.values.size(); ++k) CHECK(e.values[k - 1] >= e.values[k]);
    }
  }
  SUBCASE("rejects non-Hermitian input") {
    const ComplexMatrix m{{1, 1}, {0, 1}};
    CHECK_THROWS_AS(eig_hermitian(m), DimensionError);
    CHECK_THROWS_AS(eig_hermitian(ComplexMatrix(2, 3)), DimensionError);
  }
}

TEST_CASE("approx_eq") {
  std::mt19937_64 rng(1);
  const ComplexMatrix a = random_matrix(4, 4, rng);
  CHECK(approx_eq(a, a, 0.0));
  CHECK_FALSE(approx_eq(kId2, gates::pauli_x(), 1e-12));
  const ComplexMatrix s = swap_gate(Factorization::qubits(3), 0, 2);
  CHECK(approx_eq(s * s, ComplexMatrix::identity(8), 1e-12));
  CHECK_THROWS_AS(approx_eq(kId2, ComplexMatrix::identity(3)), DimensionError);
}
