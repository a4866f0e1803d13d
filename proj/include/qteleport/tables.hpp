#pragma once

// Reference operators written out entry by entry, used to check the
// matrices that protocol.cpp builds from Bell projectors and Pauli
// corrections. Nothing in the protocol path reads these.

#include "qteleport/linalg.hpp"

namespace qteleport::tables {

// A^i and B^i for resource |beta^1>, i in 1..4.
const ComplexMatrix& measurement_operator(int outcome);
const ComplexMatrix& correction_operator(int outcome);

// Exchange of factors 0 and 2 on three qubits.
const ComplexMatrix& swap_13();

}  // namespace qteleport::tables
