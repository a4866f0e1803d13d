#include "qteleport/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qteleport {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + describe_shape(a) + " vs " +
                         describe_shape(b));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
  if (data_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                         " entries, got " + std::to_string(data_.size()));
  }
  require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("ComplexMatrix: dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  require_finite(m.data_);
  return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + describe_shape(a) + " times " + describe_shape(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.square()) throw DimensionError("trace: non-square " + describe_shape(a));
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator+");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator-");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

bool approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

double hermiticity_violation(const ComplexMatrix& a) {
  if (!a.square()) throw DimensionError("hermiticity_violation: non-square " + describe_shape(a));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!u.square()) return false;
  return approx_eq(dagger(u) * u, ComplexMatrix::identity(u.rows()), tol);
}

Factorization::Factorization(std::vector<std::size_t> factor_dims) : dims_(std::move(factor_dims)) {
  if (dims_.empty()) throw DimensionError("Factorization: no factors");
  for (std::size_t d : dims_) {
    if (d == 0) throw DimensionError("Factorization: factor dimension must be positive");
  }
}

Factorization Factorization::qubits(std::size_t count) {
  return Factorization(std::vector<std::size_t>(count, 2));
}

std::size_t Factorization::total() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>{});
}

std::vector<std::size_t> Factorization::digits(std::size_t index) const {
  if (index >= total()) throw std::out_of_range("Factorization::digits: index out of range");
  std::vector<std::size_t> out(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = index % dims_[k];
    index /= dims_[k];
  }
  return out;
}

std::size_t Factorization::index(std::span<const std::size_t> digits) const {
  if (digits.size() != dims_.size()) throw DimensionError("Factorization::index: wrong digit count");
  std::size_t n = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (digits[k] >= dims_[k]) throw std::out_of_range("Factorization::index: digit out of range");
    n = n * dims_[k] + digits[k];
  }
  return n;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, const Factorization& f,
                            std::vector<std::size_t> keep) {
  if (!a.square() || a.rows() != f.total()) {
    std::ostringstream msg;
    msg << "partial_trace: matrix " << describe_shape(a) << " does not match factorization of total "
        << f.total();
    throw DimensionError(msg.str());
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  if (keep.back() >= f.size()) throw std::out_of_range("partial_trace: keep index out of range");

  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!std::binary_search(keep.begin(), keep.end(), k)) traced.push_back(k);
  }

  std::vector<std::size_t> kept_dims, traced_dims;
  for (std::size_t k : keep) kept_dims.push_back(f.dim(k));
  for (std::size_t k : traced) traced_dims.push_back(f.dim(k));
  const Factorization kept_f(kept_dims);
  const std::size_t n_kept = kept_f.total();
  const std::size_t n_traced =
      std::accumulate(traced_dims.begin(), traced_dims.end(), std::size_t{1}, std::multiplies<>{});

  // Full index for (kept digits, traced digits) pair, precomputed as tables.
  auto full_index = [&](const std::vector<std::size_t>& kd, const std::vector<std::size_t>& td) {
    std::vector<std::size_t> digits(f.size());
    for (std::size_t k = 0; k < keep.size(); ++k) digits[keep[k]] = kd[k];
    for (std::size_t k = 0; k < traced.size(); ++k) digits[traced[k]] = td[k];
    return f.index(digits);
  };
  std::vector<std::size_t> table(n_kept * n_traced);
  for (std::size_t r = 0; r < n_kept; ++r) {
    const auto kd = kept_f.digits(r);
    for (std::size_t t = 0; t < n_traced; ++t) {
      std::vector<std::size_t> td(traced.size());
      std::size_t rest = t;
      for (std::size_t k = traced.size(); k-- > 0;) {
        td[k] = rest % traced_dims[k];
        rest /= traced_dims[k];
      }
      table[r * n_traced + t] = full_index(kd, td);
    }
  }

  ComplexMatrix out(n_kept, n_kept);
  for (std::size_t i = 0; i < n_kept; ++i)
    for (std::size_t j = 0; j < n_kept; ++j) {
      Complex s{};
      for (std::size_t t = 0; t < n_traced; ++t) s += a(table[i * n_traced + t], table[j * n_traced + t]);
      out(i, j) = s;
    }
  return out;
}

EigenDecomposition eig_hermitian(const ComplexMatrix& input, double tol_herm) {
  if (!input.square()) throw DimensionError("eig_hermitian: non-square " + describe_shape(input));
  const double violation = hermiticity_violation(input);
  if (violation > tol_herm) {
    std::ostringstream msg;
    msg << "eig_hermitian: matrix is not Hermitian (violation " << violation << ")";
    throw DimensionError(msg.str());
  }

  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  // Work on the exactly Hermitian part.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double frob = 0.0;
  for (const Complex& z : a.entries()) frob += std::norm(z);
  const double threshold = kJacobiOffNorm * std::max(1.0, std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = off_norm() < threshold;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // J = diag(1, conj(phase)) on (p,q) times the real rotation [[c, s], [-s, c]].
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        // a <- a J
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        // a <- J^dagger a
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // v <- v J
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
    converged = off_norm() < threshold;
  }
  if (!converged) {
    throw ConvergenceError("eig_hermitian: no convergence after " + std::to_string(kJacobiMaxSweeps) +
                           " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

namespace gates {
ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }
ComplexMatrix pauli_y() { return {{0, Complex(0, -1)}, {Complex(0, 1), 0}}; }
ComplexMatrix pauli_z() { return {{1, 0}, {0, -1}}; }
}  // namespace gates

std::string describe_shape(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace qteleport
