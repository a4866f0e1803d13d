#pragma once

// JSON and plain-text rendering.
//
// Matrices: {"rows": n, "cols": m, "entries": [[re, im], ...]} in row-major
// order. Reals are rounded to 12 significant digits; integral values are
// written as JSON integers and magnitudes below kPrintFloor print as 0.

#include <string>

#include <json.hpp>

#include "qteleport/linalg.hpp"
#include "qteleport/protocol.hpp"
#include "qteleport/state.hpp"

namespace qteleport {

using Json = nlohmann::ordered_json;

inline constexpr int kPrintDigits = 12;
inline constexpr double kPrintFloor = 1e-14;

Json json_real(double x);
std::string format_real(double x);
std::string format_complex(Complex z);

Json to_json(const ComplexMatrix& m);
Json to_json(const DensityMatrix& rho);
Json to_json(const Ket& k);
Json to_json(const QubitState& psi);
Json to_json(const ProtocolReport& report);
Json to_json(const SwapComparison& cmp);

// Accepts the matrix schema, with or without a "kind" tag.
ComplexMatrix matrix_from_json(const Json& j);
Ket ket_from_json(const Json& j);

// Aligned rows, one matrix row per line, each prefixed with `indent`.
std::string format_matrix(const ComplexMatrix& m, const std::string& indent = "  ");

std::string to_text(const ProtocolReport& report);
std::string to_text(const SwapComparison& cmp);

}  // namespace qteleport
