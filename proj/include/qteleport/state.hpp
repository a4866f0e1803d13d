#pragma once

#include <random>
#include <string>
#include <vector>

#include "qteleport/linalg.hpp"

namespace qteleport {

enum class Normalize { kStrict, kRenormalize };

// Normalized state vector.
class Ket {
 public:
  // Throws std::invalid_argument if the norm is off by more than tol::norm and
  // `mode` is kStrict, or if the vector is zero.
  explicit Ket(std::vector<Complex> amplitudes, Normalize mode = Normalize::kStrict);

  static Ket basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amplitudes() const { return amps_; }

  // Column vector (dim x 1).
  ComplexMatrix column() const;

 private:
  std::vector<Complex> amps_;
};

Ket tensor(const Ket& a, const Ket& b);

// alpha|0> + beta|1> with |alpha|^2 + |beta|^2 = 1.
class QubitState {
 public:
  QubitState(Complex alpha, Complex beta, Normalize mode = Normalize::kStrict);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  Ket ket() const { return Ket({alpha_, beta_}); }

 private:
  Complex alpha_;
  Complex beta_;
};

class DensityError : public std::invalid_argument {
 public:
  enum class Kind { kNotSquare, kNotHermitian, kNotPositive, kTraceNotOne };

  DensityError(Kind kind, double violation);

  Kind kind() const { return kind_; }
  // Measured size of the violation: Hermiticity defect, most negative
  // eigenvalue, or |trace - 1|.
  double violation() const { return violation_; }

 private:
  Kind kind_;
  double violation_;
};

const char* to_string(DensityError::Kind kind);

// Hermitian, positive semidefinite, unit trace. Only obtainable through
// validate_density() or ket_to_density().
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;

  friend DensityMatrix validate_density(const ComplexMatrix& m);
  friend DensityMatrix ket_to_density(const Ket& k);
};

DensityMatrix validate_density(const ComplexMatrix& m);
DensityMatrix ket_to_density(const Ket& k);

double purity(const DensityMatrix& rho);
// <psi|rho|psi>
double fidelity_pure(const Ket& psi, const DensityMatrix& rho);
// In bits. Eigenvalues in [-tol::psd, 0) count as zero.
double von_neumann_entropy(const DensityMatrix& rho);

// Haar-distributed qubit state and Hilbert-Schmidt random density matrix.
QubitState random_qubit_state(std::mt19937_64& rng);
Ket random_ket(std::size_t dim, std::mt19937_64& rng);
DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng);

}  // namespace qteleport
