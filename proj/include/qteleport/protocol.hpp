#pragma once

// One-qubit teleportation carried out inside a single eight-level system.
//
// The 8-dim space is split into three virtual qubits |n> = |a>|b>|c>
// (big-endian). The input qubit sits on factor 0, the resource Bell pair on
// factors 1 and 2. Alice's Bell measurement is the family of rank-2
// projectors A^i/2 = |beta^i><beta^i| (x) 1_2 on the whole space, and Bob's
// correction is B^i = 1_4 (x) U^i.

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "qteleport/linalg.hpp"
#include "qteleport/state.hpp"

namespace qteleport {

inline constexpr std::size_t kSystemDim = 8;

// Outcome and resource indices run 1..4 in the order |beta^1>..|beta^4>.
class BellBasis {
 public:
  BellBasis();
  const Ket& at(int index) const;
  // sqrt(2) |beta^index>, entries in {0, 1, -1}.
  const ComplexMatrix& scaled_column(int index) const;
  std::span<const Ket> vectors() const { return vectors_; }

 private:
  std::vector<Ket> vectors_;
  std::vector<ComplexMatrix> scaled_;
};

const BellBasis& bell_basis();

struct BasisBits {
  int a;
  int b;
  int c;
  bool operator==(const BasisBits&) const = default;
};

BasisBits index_map(int n);
int index_from_bits(const BasisBits& bits);

// |psi><psi| (x) |beta^j><beta^j|
DensityMatrix build_initial_state(const QubitState& psi, int resource_index);

struct CorrectionSet {
  int resource_index;
  std::array<ComplexMatrix, 4> unitaries;  // U^1..U^4, indexed by outcome - 1
};

// The corrections for resource |beta^1> as usually tabulated:
// (1, sigma_x, sigma_z, i sigma_y).
CorrectionSet standard_corrections();

// Exhaustive search over {1, i, -1, -i} x {1, sigma_x, sigma_y, sigma_z} for
// each Bell outcome; returns the first candidate in Pauli-major order that
// restores |0>, |1>, |+> and |+i> on factor 2.
CorrectionSet derive_corrections(int resource_index);

struct KrausSet {
  int resource_index;
  std::array<ComplexMatrix, 4> a_ops;  // unnormalized, A^i/2 is the projector
  std::array<ComplexMatrix, 4> b_ops;
  double weight = 0.25;

  // B^i A^i / 2
  ComplexMatrix kraus(int outcome) const;
};

// Resource 1 uses standard_corrections() so that A^i and B^i coincide with
// the tabulated integer matrices; other resources use derive_corrections().
KrausSet kraus_set(int resource_index);

// rho -> weight * sum_i B^i A^i rho A^i B^i^dagger
DensityMatrix teleport_channel(const DensityMatrix& rho_in, const KrausSet& ks);

// p_i = Tr((A^i/2) rho (A^i/2))
std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, const KrausSet& ks);

inline constexpr double kMinBranchProbability = 1e-14;

struct Shot {
  int outcome;
  DensityMatrix post_state;  // corrected, renormalized
  std::array<double, 4> probabilities;
};

// Draws one Bell outcome. Uniform variates come from the top 53 bits of one
// std::mt19937_64 draw; branches with p_i below kMinBranchProbability are never
// selected.
Shot single_shot(const DensityMatrix& rho_in, const KrausSet& ks, std::mt19937_64& rng);
Shot single_shot(const DensityMatrix& rho_in, const KrausSet& ks, std::uint64_t rng_seed);

// Permutation matrix exchanging factors p and q (0-based).
ComplexMatrix swap_gate(const Factorization& f, std::size_t p, std::size_t q);

struct BranchSummary {
  DensityMatrix output;
  DensityMatrix marginal_12;
  DensityMatrix marginal_3;
  double purity_12;
  double entropy_12_bits;
  double purity_3;
  double entropy_3_bits;
  double fidelity;
  bool consumes_bell_pair;
};

struct SwapComparison {
  QubitState input;
  BranchSummary teleport;
  BranchSummary swap;
};

SwapComparison compare_swap_vs_teleport(const QubitState& psi);

enum class Mode { kEnsemble, kSingleShot };

const char* to_string(Mode mode);

struct ProtocolReport {
  QubitState input_state;
  int resource_index;
  Mode mode;
  std::uint64_t seed;
  std::optional<int> outcome;  // single-shot only
  DensityMatrix output_density;
  DensityMatrix marginal_3;
  DensityMatrix marginal_12;
  double fidelity;
  double output_entropy_bits;
  std::array<double, 4> outcome_probabilities;
  // Resources other than |beta^1> go beyond the tabulated construction.
  bool paper_extension;
};

ProtocolReport run_protocol(const QubitState& psi, int resource_index, Mode mode,
                            std::uint64_t rng_seed);

// Marginals of an 8x8 state on factors {0,1} and {2}.
DensityMatrix marginal_12(const DensityMatrix& rho);
DensityMatrix marginal_3(const DensityMatrix& rho);

}  // namespace qteleport
