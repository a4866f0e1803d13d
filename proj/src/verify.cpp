#include "qteleport/verify.hpp"

#include <cmath>
#include <sstream>

#include "qteleport/tables.hpp"

namespace qteleport {

namespace {

constexpr double kExact = 1e-12;
constexpr double kChannel = 1e-10;

const Factorization& two_qubits() {
  static const Factorization f = Factorization::qubits(2);
  return f;
}

std::string sci(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

// sigma blocks on the diagonal, zero elsewhere.
ComplexMatrix block_diagonal(const ComplexMatrix& sigma, std::size_t copies) {
  return kron(ComplexMatrix::identity(copies), sigma);
}

ComplexMatrix equal_mixture(std::size_t dim) {
  return (1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim);
}

// Phase-equivalence: a^dagger b is a unimodular multiple of the identity.
bool equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  const ComplexMatrix m = dagger(a) * b;
  const Complex c = m(0, 0);
  return std::abs(std::abs(c) - 1.0) <= tol &&
         approx_eq(m, c * ComplexMatrix::identity(m.rows()), tol);
}

using Check = std::function<std::string()>;  // empty string on success

CheckResult run_check(const std::string& name, const Check& body) {
  try {
    std::string failure = body();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  KrausSet ks1 = kraus_set(1);
  if (options.tamper) options.tamper(ks1);
  const auto kraus_for = [&](int resource) { return resource == 1 ? ks1 : kraus_set(resource); };

  std::vector<CheckResult> results;

  results.push_back(run_check("bell_orthonormality", [] {
    const auto& basis = bell_basis();
    ComplexMatrix gram(4, 4);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        gram(i - 1, j - 1) = (dagger(basis.at(i).column()) * basis.at(j).column())(0, 0);
    const double err = max_abs_diff(gram, ComplexMatrix::identity(4));
    return err <= kExact ? std::string() : "Gram matrix deviates by " + sci(err);
  }));

  results.push_back(run_check("bell_max_entangled", [] {
    for (int i = 1; i <= 4; ++i) {
      const ComplexMatrix rho = ket_to_density(bell_basis().at(i)).matrix();
      for (std::size_t keep : {0, 1}) {
        const double err = max_abs_diff(partial_trace(rho, two_qubits(), {keep}), equal_mixture(2));
        if (err > kExact) return "beta^" + std::to_string(i) + " reduction off by " + sci(err);
      }
    }
    return std::string();
  }));

  results.push_back(run_check("kraus_completeness", [&] {
    for (int resource = 1; resource <= 4; ++resource) {
      const KrausSet ks = kraus_for(resource);
      ComplexMatrix sum(kSystemDim, kSystemDim);
      for (int i = 1; i <= 4; ++i) sum = sum + dagger(ks.kraus(i)) * ks.kraus(i);
      const double err = max_abs_diff(sum, ComplexMatrix::identity(kSystemDim));
      if (err > kExact) return "resource " + std::to_string(resource) + ": sum K^dag K off by " + sci(err);
    }
    return std::string();
  }));

  results.push_back(run_check("projector_rank", [&] {
    for (int i = 1; i <= 4; ++i) {
      const ComplexMatrix p = 0.5 * ks1.a_ops[i - 1];
      const double idem = max_abs_diff(p * p, p);
      if (idem > kExact) return "A^" + std::to_string(i) + "/2 not idempotent (" + sci(idem) + ")";
      int rank = 0;
      for (double lambda : eig_hermitian(p).values) rank += lambda > 0.5 ? 1 : 0;
      if (rank != 2) return "A^" + std::to_string(i) + "/2 has rank " + std::to_string(rank);
    }
    return std::string();
  }));

  results.push_back(run_check("correction_unitarity", [&] {
    for (int resource = 1; resource <= 4; ++resource) {
      const KrausSet ks = kraus_for(resource);
      for (int i = 1; i <= 4; ++i)
        if (!is_unitary(ks.b_ops[i - 1], kExact))
          return "B^" + std::to_string(i) + " for resource " + std::to_string(resource) + " not unitary";
    }
    return std::string();
  }));

  results.push_back(run_check("operator_table_exact", [&] {
    for (int i = 1; i <= 4; ++i) {
      if (!(ks1.a_ops[i - 1] == tables::measurement_operator(i))) return "A^" + std::to_string(i) + " differs";
      if (!(ks1.b_ops[i - 1] == tables::correction_operator(i))) return "B^" + std::to_string(i) + " differs";
    }
    return std::string();
  }));

  results.push_back(run_check("swap_table_exact", [] {
    const ComplexMatrix s = swap_gate(Factorization::qubits(3), 0, 2);
    if (!(s == tables::swap_13())) return std::string("generated SWAP differs from table");
    if (!(s * s == ComplexMatrix::identity(kSystemDim))) return std::string("SWAP is not an involution");
    return std::string();
  }));

  results.push_back(run_check("fidelity_sweep", [&] {
    std::mt19937_64 rng(options.seed);
    for (std::size_t n = 0; n < options.count; ++n) {
      const QubitState psi = random_qubit_state(rng);
      const ComplexMatrix sigma = ket_to_density(psi.ket()).matrix();
      for (int resource = 1; resource <= 4; ++resource) {
        const KrausSet ks = kraus_for(resource);
        const DensityMatrix rho_in = build_initial_state(psi, resource);
        const DensityMatrix out = teleport_channel(rho_in, ks);
        const std::string where = "state " + std::to_string(n) + ", resource " + std::to_string(resource);
        const double block = max_abs_diff(out.matrix(), 0.25 * block_diagonal(sigma, 4));
        if (block > kChannel) return where + ": output not diag(sigma)/4 (" + sci(block) + ")";
        const double fid = fidelity_pure(psi.ket(), marginal_3(out));
        if (fid < 1.0 - options.tol) return where + ": fidelity " + sci(fid);
        const double mixed = max_abs_diff(marginal_12(out).matrix(), equal_mixture(4));
        if (mixed > kChannel) return where + ": factors {0,1} not maximally mixed (" + sci(mixed) + ")";
        for (double p : outcome_probabilities(rho_in, ks))
          if (std::abs(p - 0.25) > kChannel) return where + ": outcome probability " + sci(p);
      }
    }
    return std::string();
  }));

  results.push_back(run_check("channel_cptp_random", [&] {
    std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t n = 0; n < options.count; ++n) {
      const DensityMatrix rho = random_density(kSystemDim, rng);
      const DensityMatrix out = teleport_channel(rho, ks1);  // validates
      const double drift = std::abs(trace(out.matrix()) - 1.0);
      if (drift > kChannel) return "trace drift " + sci(drift) + " on random state " + std::to_string(n);
    }
    return std::string();
  }));

  results.push_back(run_check("swap_contrast", [&] {
    std::mt19937_64 rng(options.seed + 1);
    const SwapComparison cmp = compare_swap_vs_teleport(random_qubit_state(rng));
    if (std::abs(cmp.teleport.entropy_12_bits - 2.0) > options.tol)
      return "teleport entropy_12 " + sci(cmp.teleport.entropy_12_bits);
    if (std::abs(cmp.swap.entropy_12_bits) > options.tol) return "swap entropy_12 " + sci(cmp.swap.entropy_12_bits);
    if (cmp.teleport.fidelity < 1.0 - options.tol || cmp.swap.fidelity < 1.0 - options.tol)
      return std::string("marginal_3 fidelity below threshold");
    return std::string();
  }));

  results.push_back(run_check("derived_corrections", [&] {
    const CorrectionSet found = derive_corrections(1);
    const CorrectionSet standard = standard_corrections();
    for (int i = 1; i <= 4; ++i)
      if (!equal_up_to_phase(found.unitaries[i - 1], standard.unitaries[i - 1], kChannel))
        return "outcome " + std::to_string(i) + " correction differs from standard set beyond phase";
    return std::string();
  }));

  return results;
}

}  // namespace qteleport
