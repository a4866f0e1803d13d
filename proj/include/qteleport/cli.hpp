#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qteleport/linalg.hpp"
#include "qteleport/protocol.hpp"

namespace qteleport::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

enum class Command { kTeleport, kSwapCompare, kVerify, kDumpTables };
enum class Output { kText, kJson };

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kInputNormSlack = 1e-6;
inline constexpr const char* kTolEnv = "QTELEPORT_TOL";

struct CliConfig {
  Command command = Command::kTeleport;
  Complex alpha = 1.0;
  Complex beta = 0.0;
  int resource_index = 1;
  Mode mode = Mode::kEnsemble;
  std::uint64_t seed = 0;
  Output output = Output::kText;
  double tol = kDefaultTol;
  bool renormalize = false;
  std::size_t count = 1000;
  // Negative-control hook for `verify`: mutates the resource-1 Kraus set.
  std::function<void(KrausSet&)> tamper;
};

// "0.6", "0.8i", "-i", "0.6+0.8i", "1e-1-2.5e-1i"; 'j' is accepted for 'i'.
std::optional<Complex> parse_complex(std::string_view text);

int cmd_teleport(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_swap_compare(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dump_tables(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (including the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qteleport::cli
