#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qteleport/protocol.hpp"

namespace qteleport {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  std::size_t count = 1000;  // random states in the fidelity sweep
  std::uint64_t seed = 0;
  double tol = 1e-9;
  // Applied to kraus_set(1) before any check runs; negative controls use
  // this to inject a corrupted operator.
  std::function<void(KrausSet&)> tamper;
};

// Runs every check in a fixed order and reports all of them.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace qteleport
