#include "qteleport/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qteleport {

namespace {

double squared_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

void normalize_in_place(std::vector<Complex>& v, Normalize mode, const char* who) {
  const double n2 = squared_norm(v);
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw std::invalid_argument(std::string(who) + ": zero or non-finite vector");
  }
  const double n = std::sqrt(n2);
  if (mode == Normalize::kStrict) {
    if (std::abs(n - 1.0) > tol::norm) {
      std::ostringstream msg;
      msg << who << ": norm " << n << " deviates from 1";
      throw std::invalid_argument(msg.str());
    }
    return;
  }
  for (Complex& z : v) z /= n;
}

}  // namespace

Ket::Ket(std::vector<Complex> amplitudes, Normalize mode) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw DimensionError("Ket: empty amplitude list");
  normalize_in_place(amps_, mode, "Ket");
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("Ket::basis: index out of range");
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return Ket(std::move(v));
}

ComplexMatrix Ket::column() const { return ComplexMatrix(amps_.size(), 1, amps_); }

Ket tensor(const Ket& a, const Ket& b) {
  std::vector<Complex> v;
  v.reserve(a.dim() * b.dim());
  for (const Complex& x : a.amplitudes())
    for (const Complex& y : b.amplitudes()) v.push_back(x * y);
  return Ket(std::move(v), Normalize::kRenormalize);
}

QubitState::QubitState(Complex alpha, Complex beta, Normalize mode) {
  std::vector<Complex> v{alpha, beta};
  normalize_in_place(v, mode, "QubitState");
  alpha_ = v[0];
  beta_ = v[1];
}

DensityError::DensityError(Kind kind, double violation)
    : std::invalid_argument([&] {
        std::ostringstream msg;
        msg << "invalid density matrix: " << to_string(kind) << " (violation " << violation << ")";
        return msg.str();
      }()),
      kind_(kind),
      violation_(violation) {}

const char* to_string(DensityError::Kind kind) {
  switch (kind) {
    case DensityError::Kind::kNotSquare: return "NotSquare";
    case DensityError::Kind::kNotHermitian: return "NotHermitian";
    case DensityError::Kind::kNotPositive: return "NotPositive";
    case DensityError::Kind::kTraceNotOne: return "TraceNotOne";
  }
  return "Unknown";
}

DensityMatrix validate_density(const ComplexMatrix& m) {
  if (!m.square()) throw DensityError(DensityError::Kind::kNotSquare, 0.0);
  const double herm = hermiticity_violation(m);
  if (herm > tol::herm) throw DensityError(DensityError::Kind::kNotHermitian, herm);
  const double tr_defect = std::abs(trace(m) - 1.0);
  if (tr_defect > tol::norm) throw DensityError(DensityError::Kind::kTraceNotOne, tr_defect);
  const auto eig = eig_hermitian(m);
  const double lowest = eig.values.back();
  if (lowest < -tol::psd) throw DensityError(DensityError::Kind::kNotPositive, lowest);
  return DensityMatrix(m);
}

DensityMatrix ket_to_density(const Ket& k) {
  const ComplexMatrix col = k.column();
  return DensityMatrix(col * dagger(col));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return squared_norm(rho.matrix().entries());
}

double fidelity_pure(const Ket& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) {
    throw DimensionError("fidelity_pure: ket of dim " + std::to_string(psi.dim()) +
                         " vs density of dim " + std::to_string(rho.dim()));
  }
  const ComplexMatrix col = psi.column();
  return (dagger(col) * rho.matrix() * col)(0, 0).real();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eig = eig_hermitian(rho.matrix());
  double s = 0.0;
  for (double lambda : eig.values) {
    if (lambda <= 0.0) continue;  // clamped round-off
    s -= lambda * std::log2(lambda);
  }
  return s;
}

QubitState random_qubit_state(std::mt19937_64& rng) {
  const Ket k = random_ket(2, rng);
  return QubitState(k[0], k[1]);
}

Ket random_ket(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> v(dim);
  for (Complex& z : v) z = {gauss(rng), gauss(rng)};
  return Ket(std::move(v), Normalize::kRenormalize);
}

DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = {gauss(rng), gauss(rng)};
  ComplexMatrix w = g * dagger(g);
  w = (1.0 / trace(w).real()) * w;
  return validate_density(w);
}

}  // namespace qteleport
