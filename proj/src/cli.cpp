#include "qteleport/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "qteleport/serialize.hpp"
#include "qteleport/verify.hpp"

namespace qteleport::cli {

namespace {

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Imaginary term without its unit: "", "+", "-" mean +-1.
std::optional<double> parse_imag_coefficient(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

std::ostream& emit(std::ostream& out, const Json& j) { return out << j.dump(2) << "\n"; }

void print_matrix_block(std::ostream& out, const std::string& name, const ComplexMatrix& m) {
  out << name << ":\n" << format_matrix(m);
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;

  const char last = s.back();
  if (last != 'i' && last != 'j') {
    const auto re = parse_real(s);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  s.pop_back();

  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    const auto im = parse_imag_coefficient(s);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
  }
  const auto re = parse_real(std::string_view(s).substr(0, split));
  const auto im = parse_imag_coefficient(std::string_view(s).substr(split));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

namespace {

// Returns nullopt (after reporting) when the amplitudes are unusable.
std::optional<QubitState> input_state(const CliConfig& cfg, std::ostream& err) {
  const double norm = std::sqrt(std::norm(cfg.alpha) + std::norm(cfg.beta));
  if (!(norm > 0.0)) {
    err << "error: alpha and beta are both zero\n";
    return std::nullopt;
  }
  if (std::abs(norm - 1.0) > kInputNormSlack && !cfg.renormalize) {
    err << "error: |alpha|^2 + |beta|^2 = " << format_real(norm * norm)
        << " is not 1 (pass --renormalize to rescale)\n";
    return std::nullopt;
  }
  return QubitState(cfg.alpha, cfg.beta, Normalize::kRenormalize);
}

}  // namespace

int cmd_teleport(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto psi = input_state(cfg, err);
  if (!psi) return kUsageError;
  if (cfg.resource_index < 1 || cfg.resource_index > 4) {
    err << "error: --resource must be in 1..4\n";
    return kUsageError;
  }
  const ProtocolReport report = run_protocol(*psi, cfg.resource_index, cfg.mode, cfg.seed);
  if (cfg.output == Output::kJson) {
    emit(out, to_json(report));
  } else {
    out << to_text(report);
  }
  if (report.fidelity < 1.0 - cfg.tol) {
    err << "FAIL: fidelity " << format_real(report.fidelity) << " below 1 - " << cfg.tol << "\n";
    return kCheckFailed;
  }
  return kSuccess;
}

int cmd_swap_compare(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto psi = input_state(cfg, err);
  if (!psi) return kUsageError;
  const SwapComparison cmp = compare_swap_vs_teleport(*psi);
  if (cfg.output == Output::kJson) {
    emit(out, to_json(cmp));
  } else {
    out << to_text(cmp);
  }
  bool ok = true;
  if (std::abs(cmp.teleport.entropy_12_bits - 2.0) > cfg.tol) {
    err << "FAIL: teleport marginal_12 entropy " << format_real(cmp.teleport.entropy_12_bits) << " != 2\n";
    ok = false;
  }
  if (std::abs(cmp.swap.entropy_12_bits) > cfg.tol) {
    err << "FAIL: swap marginal_12 entropy " << format_real(cmp.swap.entropy_12_bits) << " != 0\n";
    ok = false;
  }
  for (const auto* b : {&cmp.teleport, &cmp.swap}) {
    if (b->fidelity < 1.0 - cfg.tol) {
      err << "FAIL: marginal_3 fidelity " << format_real(b->fidelity) << "\n";
      ok = false;
    }
  }
  return ok ? kSuccess : kCheckFailed;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.count = cfg.count;
  options.seed = cfg.seed;
  options.tol = cfg.tol;
  options.tamper = cfg.tamper;
  const auto results = run_verify(options);

  const CheckResult* first_failure = nullptr;
  Json checks = Json::array();
  for (const CheckResult& r : results) {
    if (!r.passed && !first_failure) first_failure = &r;
    if (cfg.output == Output::kJson) {
      Json j;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["detail"] = r.detail;
      checks.push_back(std::move(j));
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    }
  }
  if (cfg.output == Output::kJson) {
    Json j;
    j["count"] = cfg.count;
    j["seed"] = cfg.seed;
    j["passed"] = first_failure == nullptr;
    j["checks"] = std::move(checks);
    emit(out, j);
  }
  if (first_failure) {
    err << "verify failed: " << first_failure->name << "\n";
    return kCheckFailed;
  }
  return kSuccess;
}

int cmd_dump_tables(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const KrausSet ks = kraus_set(1);
  const ComplexMatrix swap = swap_gate(Factorization::qubits(3), 0, 2);
  if (cfg.output == Output::kJson) {
    Json a = Json::array();
    Json b = Json::array();
    Json bell = Json::array();
    for (int i = 1; i <= 4; ++i) {
      a.push_back(to_json(ks.a_ops[i - 1]));
      b.push_back(to_json(ks.b_ops[i - 1]));
      bell.push_back(to_json(bell_basis().at(i)));
    }
    Json j;
    j["A"] = std::move(a);
    j["B"] = std::move(b);
    j["SWAP_1_3"] = to_json(swap);
    j["bell_basis"] = std::move(bell);
    emit(out, j);
    return kSuccess;
  }
  for (int i = 1; i <= 4; ++i) print_matrix_block(out, "A^" + std::to_string(i), ks.a_ops[i - 1]);
  for (int i = 1; i <= 4; ++i) print_matrix_block(out, "B^" + std::to_string(i), ks.b_ops[i - 1]);
  print_matrix_block(out, "SWAP_1<->3", swap);
  for (int i = 1; i <= 4; ++i) {
    out << "beta^" << i << ":";
    for (const Complex& z : bell_basis().at(i).amplitudes()) out << " " << format_complex(z);
    out << "\n";
  }
  return kSuccess;
}

namespace {

struct RawOptions {
  std::string alpha = "1";
  std::string beta = "0";
  std::optional<double> alpha_re, alpha_im, beta_re, beta_im;
  std::optional<double> tol;
  std::string mode = "ensemble";
  std::string output = "text";
  bool corrupt_operator = false;
};

void add_output(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--output,-o", raw.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_state(CLI::App* sub, RawOptions& raw, CliConfig& cfg) {
  sub->add_option("--alpha", raw.alpha, "Amplitude of |0>, e.g. 0.6 or 0.6+0.8i")->capture_default_str();
  sub->add_option("--beta", raw.beta, "Amplitude of |1>, e.g. 0.8i")->capture_default_str();
  sub->add_option("--alpha-re", raw.alpha_re, "Real part of alpha (overrides --alpha)");
  sub->add_option("--alpha-im", raw.alpha_im, "Imaginary part of alpha (overrides --alpha)");
  sub->add_option("--beta-re", raw.beta_re, "Real part of beta (overrides --beta)");
  sub->add_option("--beta-im", raw.beta_im, "Imaginary part of beta (overrides --beta)");
  sub->add_flag("--renormalize", cfg.renormalize, "Rescale (alpha, beta) to unit norm");
}

void add_tol(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--tol", raw.tol, "Pass/fail tolerance (default 1e-9, or $QTELEPORT_TOL)");
}

std::optional<Complex> resolve_amplitude(const std::string& literal, const std::optional<double>& re,
                                         const std::optional<double>& im) {
  if (re || im) return Complex(re.value_or(0.0), im.value_or(0.0));
  return parse_complex(literal);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-qubit teleportation inside one eight-level system", "qteleport"};
  app.require_subcommand(1);

  CliConfig cfg;
  RawOptions raw;

  auto* teleport = app.add_subcommand("teleport", "Run the protocol and report the output state");
  add_state(teleport, raw, cfg);
  teleport->add_option("--resource", cfg.resource_index, "Resource Bell state index (1..4)")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  teleport->add_option("--mode", raw.mode, "ensemble or single-shot")
      ->check(CLI::IsMember({"ensemble", "single-shot"}))
      ->capture_default_str();
  teleport->add_option("--seed", cfg.seed, "RNG seed for single-shot mode")->capture_default_str();
  add_output(teleport, raw);
  add_tol(teleport, raw);

  auto* swap = app.add_subcommand("swap-compare", "Contrast teleportation with the SWAP of factors 1 and 3");
  add_state(swap, raw, cfg);
  add_output(swap, raw);
  add_tol(swap, raw);

  auto* verify = app.add_subcommand("verify", "Run the full invariant suite");
  verify->add_option("--count", cfg.count, "Random states in the fidelity sweep")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed for the random sweeps")->capture_default_str();
  verify->add_flag("--corrupt-operator", raw.corrupt_operator)->group("");
  add_output(verify, raw);
  add_tol(verify, raw);

  auto* dump = app.add_subcommand("dump-tables", "Print A^i, B^i, SWAP and the Bell vectors");
  add_output(dump, raw);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  if (raw.tol) {
    cfg.tol = *raw.tol;
  } else if (const char* env = std::getenv(kTolEnv); env && *env) {
    const auto parsed = parse_complex(env);
    if (!parsed || parsed->imag() != 0.0) {
      err << "error: " << kTolEnv << "=" << env << " is not a number\n";
      return kUsageError;
    }
    cfg.tol = parsed->real();
  }
  if (!(cfg.tol >= 0.0)) {
    err << "error: tolerance must be non-negative\n";
    return kUsageError;
  }

  cfg.output = raw.output == "json" ? Output::kJson : Output::kText;
  cfg.mode = raw.mode == "single-shot" ? Mode::kSingleShot : Mode::kEnsemble;
  if (raw.corrupt_operator) {
    cfg.tamper = [](KrausSet& ks) { ks.a_ops[0](0, 6) = 0.0; };
  }

  if (teleport->parsed() || swap->parsed()) {
    const auto alpha = resolve_amplitude(raw.alpha, raw.alpha_re, raw.alpha_im);
    const auto beta = resolve_amplitude(raw.beta, raw.beta_re, raw.beta_im);
    if (!alpha || !beta) {
      err << "error: could not parse " << (!alpha ? "--alpha" : "--beta") << " as a complex number\n";
      return kUsageError;
    }
    cfg.alpha = *alpha;
    cfg.beta = *beta;
  }

  try {
    if (teleport->parsed()) return cmd_teleport(cfg, out, err);
    if (swap->parsed()) return cmd_swap_compare(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    return cmd_dump_tables(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace qteleport::cli
