#include "qteleport/protocol.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace qteleport {

namespace {

const Factorization& three_qubits() {
  static const Factorization f = Factorization::qubits(3);
  return f;
}

void require_resource(int resource_index, const char* who) {
  if (resource_index < 1 || resource_index > 4) {
    throw std::out_of_range(std::string(who) + ": resource index must be in 1..4, got " +
                            std::to_string(resource_index));
  }
}

void require_system_dim(const DensityMatrix& rho, const char* who) {
  if (rho.dim() != kSystemDim) {
    throw DimensionError(std::string(who) + ": expected an 8x8 state, got dim " +
                         std::to_string(rho.dim()));
  }
}

ComplexMatrix conjugate(const ComplexMatrix& k, const ComplexMatrix& rho) {
  return k * rho * dagger(k);
}

// Test inputs that pin a qubit channel down to the identity.
const std::array<Ket, 4>& spanning_inputs() {
  static const double h = 1.0 / std::sqrt(2.0);
  static const std::array<Ket, 4> kets{Ket({1.0, 0.0}), Ket({0.0, 1.0}), Ket({h, h}),
                                       Ket({h, Complex(0.0, h)})};
  return kets;
}

}  // namespace

BellBasis::BellBasis() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<std::array<double, 4>, 4> signs{{{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, -1}, {0, 1, -1, 0}}};
  for (const auto& row : signs) {
    std::vector<Complex> scaled(row.begin(), row.end());
    scaled_.emplace_back(4, 1, scaled);
    for (Complex& z : scaled) z *= h;
    vectors_.emplace_back(std::move(scaled));
  }
}

const Ket& BellBasis::at(int index) const {
  if (index < 1 || index > 4) throw std::out_of_range("BellBasis::at: index must be in 1..4");
  return vectors_[static_cast<std::size_t>(index - 1)];
}

const ComplexMatrix& BellBasis::scaled_column(int index) const {
  if (index < 1 || index > 4) throw std::out_of_range("BellBasis::scaled_column: index must be in 1..4");
  return scaled_[static_cast<std::size_t>(index - 1)];
}

const BellBasis& bell_basis() {
  static const BellBasis basis;
  return basis;
}

BasisBits index_map(int n) {
  if (n < 0 || n > 7) throw std::out_of_range("index_map: n must be in 0..7");
  return {(n >> 2) & 1, (n >> 1) & 1, n & 1};
}

int index_from_bits(const BasisBits& bits) {
  for (int bit : {bits.a, bits.b, bits.c}) {
    if (bit != 0 && bit != 1) throw std::out_of_range("index_from_bits: bits must be 0 or 1");
  }
  return 4 * bits.a + 2 * bits.b + bits.c;
}

DensityMatrix build_initial_state(const QubitState& psi, int resource_index) {
  require_resource(resource_index, "build_initial_state");
  return ket_to_density(tensor(psi.ket(), bell_basis().at(resource_index)));
}

CorrectionSet standard_corrections() {
  return {1,
          {ComplexMatrix::identity(2), gates::pauli_x(), gates::pauli_z(),
           Complex(0, 1) * gates::pauli_y()}};
}

CorrectionSet derive_corrections(int resource_index) {
  require_resource(resource_index, "derive_corrections");
  const std::array<ComplexMatrix, 4> paulis{ComplexMatrix::identity(2), gates::pauli_x(),
                                            gates::pauli_y(), gates::pauli_z()};
  const std::array<Complex, 4> phases{1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  const ComplexMatrix id4 = ComplexMatrix::identity(4);

  // Uncorrected post-measurement states, per test input and outcome.
  std::vector<std::array<ComplexMatrix, 4>> branches;
  for (const Ket& psi : spanning_inputs()) {
    const ComplexMatrix rho =
        ket_to_density(tensor(psi, bell_basis().at(resource_index))).matrix();
    std::array<ComplexMatrix, 4> per_outcome{rho, rho, rho, rho};
    for (int i = 1; i <= 4; ++i) {
      const ComplexMatrix proj =
          kron(ket_to_density(bell_basis().at(i)).matrix(), ComplexMatrix::identity(2));
      const ComplexMatrix post = conjugate(proj, rho);
      per_outcome[i - 1] = (1.0 / trace(post).real()) * post;
    }
    branches.push_back(std::move(per_outcome));
  }

  CorrectionSet out{resource_index, {id4, id4, id4, id4}};
  for (int i = 1; i <= 4; ++i) {
    bool found = false;
    for (const ComplexMatrix& pauli : paulis) {
      for (const Complex& phase : phases) {
        const ComplexMatrix u = phase * pauli;
        const ComplexMatrix b = kron(id4, u);
        bool restores_all = true;
        for (std::size_t s = 0; s < spanning_inputs().size() && restores_all; ++s) {
          const DensityMatrix corrected = validate_density(conjugate(b, branches[s][i - 1]));
          restores_all = fidelity_pure(spanning_inputs()[s], marginal_3(corrected)) >= 1.0 - 1e-9;
        }
        if (restores_all) {
          out.unitaries[i - 1] = u;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      throw std::logic_error("derive_corrections: no Pauli correction for resource " +
                             std::to_string(resource_index) + ", outcome " + std::to_string(i));
    }
  }
  return out;
}

ComplexMatrix KrausSet::kraus(int outcome) const {
  if (outcome < 1 || outcome > 4) throw std::out_of_range("KrausSet::kraus: outcome must be in 1..4");
  const auto k = static_cast<std::size_t>(outcome - 1);
  return 0.5 * (b_ops[k] * a_ops[k]);
}

KrausSet kraus_set(int resource_index) {
  require_resource(resource_index, "kraus_set");
  const CorrectionSet corrections =
      resource_index == 1 ? standard_corrections() : derive_corrections(resource_index);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  const ComplexMatrix id4 = ComplexMatrix::identity(4);

  KrausSet ks{resource_index, {id2, id2, id2, id2}, {id2, id2, id2, id2}};
  for (int i = 1; i <= 4; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    // 2 |beta^i><beta^i| = v v^dagger with v = sqrt(2) |beta^i>, exact in integers.
    const ComplexMatrix& v = bell_basis().scaled_column(i);
    ks.a_ops[k] = kron(v * dagger(v), id2);
    ks.b_ops[k] = kron(id4, corrections.unitaries[k]);
  }
  return ks;
}

DensityMatrix teleport_channel(const DensityMatrix& rho_in, const KrausSet& ks) {
  require_system_dim(rho_in, "teleport_channel");
  ComplexMatrix acc(kSystemDim, kSystemDim);
  for (std::size_t k = 0; k < 4; ++k) {
    const ComplexMatrix ba = ks.b_ops[k] * ks.a_ops[k];
    acc = acc + conjugate(ba, rho_in.matrix());
  }
  return validate_density(ks.weight * acc);
}

std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, const KrausSet& ks) {
  require_system_dim(rho, "outcome_probabilities");
  std::array<double, 4> p{};
  for (std::size_t k = 0; k < 4; ++k) {
    const ComplexMatrix proj = 0.5 * ks.a_ops[k];
    p[k] = trace(conjugate(proj, rho.matrix())).real();
  }
  return p;
}

Shot single_shot(const DensityMatrix& rho_in, const KrausSet& ks, std::mt19937_64& rng) {
  const std::array<double, 4> p = outcome_probabilities(rho_in, ks);

  double eligible = 0.0;
  for (double pi : p)
    if (pi >= kMinBranchProbability) eligible += pi;
  if (!(eligible > 0.0)) throw std::runtime_error("single_shot: no branch with nonzero probability");

  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const double target = u * eligible;
  int outcome = 0;
  double cumulative = 0.0;
  for (int i = 1; i <= 4; ++i) {
    if (p[i - 1] < kMinBranchProbability) continue;
    outcome = i;
    cumulative += p[i - 1];
    if (target < cumulative) break;
  }

  const ComplexMatrix k = ks.kraus(outcome);
  const ComplexMatrix post = (1.0 / p[outcome - 1]) * conjugate(k, rho_in.matrix());
  return {outcome, validate_density(post), p};
}

Shot single_shot(const DensityMatrix& rho_in, const KrausSet& ks, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return single_shot(rho_in, ks, rng);
}

ComplexMatrix swap_gate(const Factorization& f, std::size_t p, std::size_t q) {
  if (p >= f.size() || q >= f.size()) throw std::out_of_range("swap_gate: factor index out of range");
  if (p == q) throw std::invalid_argument("swap_gate: factors must differ");
  if (f.dim(p) != f.dim(q)) throw DimensionError("swap_gate: factor dimensions differ");
  const std::size_t n = f.total();
  ComplexMatrix s(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    auto digits = f.digits(col);
    std::swap(digits[p], digits[q]);
    s(f.index(digits), col) = 1.0;
  }
  return s;
}

DensityMatrix marginal_12(const DensityMatrix& rho) {
  require_system_dim(rho, "marginal_12");
  return validate_density(partial_trace(rho.matrix(), three_qubits(), {0, 1}));
}

DensityMatrix marginal_3(const DensityMatrix& rho) {
  require_system_dim(rho, "marginal_3");
  return validate_density(partial_trace(rho.matrix(), three_qubits(), {2}));
}

namespace {

BranchSummary summarize(const DensityMatrix& output, const QubitState& psi, bool consumes_bell_pair) {
  DensityMatrix m12 = marginal_12(output);
  DensityMatrix m3 = marginal_3(output);
  const double p12 = purity(m12);
  const double s12 = von_neumann_entropy(m12);
  const double p3 = purity(m3);
  const double s3 = von_neumann_entropy(m3);
  const double fid = fidelity_pure(psi.ket(), m3);
  return {output, std::move(m12), std::move(m3), p12, s12, p3, s3, fid, consumes_bell_pair};
}

}  // namespace

SwapComparison compare_swap_vs_teleport(const QubitState& psi) {
  const DensityMatrix rho_in = build_initial_state(psi, 1);
  const DensityMatrix teleported = teleport_channel(rho_in, kraus_set(1));
  const ComplexMatrix s = swap_gate(three_qubits(), 0, 2);
  const DensityMatrix swapped = validate_density(conjugate(s, rho_in.matrix()));
  return {psi, summarize(teleported, psi, true), summarize(swapped, psi, false)};
}

const char* to_string(Mode mode) {
  return mode == Mode::kEnsemble ? "ensemble" : "single-shot";
}

ProtocolReport run_protocol(const QubitState& psi, int resource_index, Mode mode,
                            std::uint64_t rng_seed) {
  const DensityMatrix rho_in = build_initial_state(psi, resource_index);
  const KrausSet ks = kraus_set(resource_index);

  std::optional<int> outcome;
  std::optional<DensityMatrix> output;
  std::array<double, 4> probabilities{};
  if (mode == Mode::kEnsemble) {
    output = teleport_channel(rho_in, ks);
    probabilities = outcome_probabilities(rho_in, ks);
  } else {
    Shot shot = single_shot(rho_in, ks, rng_seed);
    outcome = shot.outcome;
    probabilities = shot.probabilities;
    output = std::move(shot.post_state);
  }

  DensityMatrix m3 = marginal_3(*output);
  DensityMatrix m12 = marginal_12(*output);
  const double fidelity = fidelity_pure(psi.ket(), m3);
  const double entropy = von_neumann_entropy(*output);
  return {psi,         resource_index, mode,      rng_seed, outcome,       std::move(*output),
          std::move(m3), std::move(m12), fidelity, entropy,  probabilities, resource_index != 1};
}

}  // namespace qteleport
