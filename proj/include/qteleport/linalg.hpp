#pragma once

// Dense complex matrices for small Hilbert spaces (d <= 64).
//
// Basis indices of a factorized space are big-endian: factor 0 carries the
// most significant digit, so for three qubits |n> <-> |a>|b>|c> with
// n = 4a + 2b + c. kron(), partial_trace() and swap_gate() all share this.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qteleport {

using Complex = std::complex<double>;

namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double recon = 1e-10;
inline constexpr double approx = 1e-12;
inline constexpr double norm = 1e-9;
inline constexpr double psd = 1e-10;
}  // namespace tol

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  // Row-major nested initializer, e.g. {{1, 0}, {0, -1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, Complex s);

// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol = tol::approx);

// Largest |a(i,j) - conj(a(j,i))|.
double hermiticity_violation(const ComplexMatrix& a);
bool is_unitary(const ComplexMatrix& u, double tol = tol::approx);

// Ordered list of tensor-factor dimensions for one Hilbert space.
class Factorization {
 public:
  explicit Factorization(std::vector<std::size_t> factor_dims);
  static Factorization qubits(std::size_t count);

  std::span<const std::size_t> dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  std::size_t dim(std::size_t factor) const { return dims_.at(factor); }
  std::size_t total() const;

  // Mixed-radix digits of a basis index, factor 0 first.
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(std::span<const std::size_t> digits) const;

  bool operator==(const Factorization&) const = default;

 private:
  std::vector<std::size_t> dims_;
};

// Reduced matrix on the kept factors; kept factors stay in their original
// order regardless of the order in `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& a, const Factorization& f,
                            std::vector<std::size_t> keep);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffNorm = 1e-13;

// Cyclic complex Jacobi. Throws DimensionError for non-Hermitian input
// (beyond tol_herm) and ConvergenceError after kJacobiMaxSweeps sweeps.
EigenDecomposition eig_hermitian(const ComplexMatrix& a, double tol_herm = tol::herm);

// Common 2x2 operators.
namespace gates {
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
}  // namespace gates

std::string describe_shape(const ComplexMatrix& a);

}  // namespace qteleport
