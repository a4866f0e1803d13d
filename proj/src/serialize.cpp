#include "qteleport/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qteleport {

namespace {

double rounded(double x) {
  if (std::abs(x) < kPrintFloor) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kPrintDigits, x);
  return std::strtod(buf, nullptr);
}

bool integral(double x) { return std::abs(x) < 9.0e15 && x == std::trunc(x); }

Json pair(Complex z) { return Json::array({json_real(z.real()), json_real(z.imag())}); }

Complex pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected [re, im] pair, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json json_real(double x) {
  const double r = rounded(x);
  if (integral(r)) return static_cast<std::int64_t>(r);
  return r;
}

std::string format_real(double x) {
  const double r = rounded(x);
  if (integral(r)) return std::to_string(static_cast<std::int64_t>(r));
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kPrintDigits, r);
  return buf;
}

std::string format_complex(Complex z) {
  const double re = rounded(z.real());
  const double im = rounded(z.imag());
  if (im == 0.0) return format_real(re);
  const std::string im_part = (std::abs(im) == 1.0 ? "" : format_real(std::abs(im))) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + im_part;
  return format_real(re) + (im < 0 ? "-" : "+") + im_part;
}

Json to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (const Complex& z : m.entries()) entries.push_back(pair(z));
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const DensityMatrix& rho) {
  Json j;
  j["kind"] = "density";
  const Json body = to_json(rho.matrix());
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

Json to_json(const Ket& k) {
  Json amps = Json::array();
  for (const Complex& z : k.amplitudes()) amps.push_back(pair(z));
  Json j;
  j["kind"] = "ket";
  j["amplitudes"] = std::move(amps);
  return j;
}

Json to_json(const QubitState& psi) {
  Json j;
  j["alpha"] = pair(psi.alpha());
  j["beta"] = pair(psi.beta());
  return j;
}

Json to_json(const ProtocolReport& report) {
  Json probs = Json::array();
  for (double p : report.outcome_probabilities) probs.push_back(json_real(p));
  Json j;
  j["mode"] = to_string(report.mode);
  j["seed"] = report.seed;
  j["resource_index"] = report.resource_index;
  j["paper_extension"] = report.paper_extension;
  j["input_state"] = to_json(report.input_state);
  j["outcome"] = report.outcome ? Json(*report.outcome) : Json(nullptr);
  j["outcome_probabilities"] = std::move(probs);
  j["fidelity"] = json_real(report.fidelity);
  j["output_entropy_bits"] = json_real(report.output_entropy_bits);
  j["output_density"] = to_json(report.output_density);
  j["marginal_12"] = to_json(report.marginal_12);
  j["marginal_3"] = to_json(report.marginal_3);
  return j;
}

namespace {

Json branch_json(const BranchSummary& b) {
  Json j;
  j["consumes_bell_pair"] = b.consumes_bell_pair;
  j["fidelity"] = json_real(b.fidelity);
  j["purity_12"] = json_real(b.purity_12);
  j["entropy_12_bits"] = json_real(b.entropy_12_bits);
  j["purity_3"] = json_real(b.purity_3);
  j["entropy_3_bits"] = json_real(b.entropy_3_bits);
  j["marginal_12"] = to_json(b.marginal_12);
  j["marginal_3"] = to_json(b.marginal_3);
  j["output_density"] = to_json(b.output);
  return j;
}

}  // namespace

Json to_json(const SwapComparison& cmp) {
  Json j;
  j["input_state"] = to_json(cmp.input);
  j["teleport"] = branch_json(cmp.teleport);
  j["swap"] = branch_json(cmp.swap);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw std::invalid_argument("matrix JSON needs rows, cols and entries");
  }
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (!entries.is_array()) throw std::invalid_argument("matrix JSON: entries must be an array");
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const Json& e : entries) values.push_back(pair_from_json(e));
  return ComplexMatrix(rows, cols, std::move(values));
}

Ket ket_from_json(const Json& j) {
  if (!j.is_object() || j.value("kind", "") != "ket" || !j.contains("amplitudes")) {
    throw std::invalid_argument("ket JSON needs kind \"ket\" and amplitudes");
  }
  std::vector<Complex> amps;
  for (const Json& e : j.at("amplitudes")) amps.push_back(pair_from_json(e));
  return Ket(std::move(amps));
}

std::string format_matrix(const ComplexMatrix& m, const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const Complex& z : m.entries()) {
    cells.push_back(format_complex(z));
    width = std::max(width, cells.back().size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      out << (c ? " " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    out << "]\n";
  }
  return out.str();
}

std::string to_text(const ProtocolReport& report) {
  std::ostringstream out;
  out << "mode: " << to_string(report.mode) << "\n";
  out << "seed: " << report.seed << "\n";
  out << "resource_index: " << report.resource_index
      << (report.paper_extension ? " (beyond the tabulated |beta^1> construction)" : "") << "\n";
  out << "alpha: " << format_complex(report.input_state.alpha()) << "\n";
  out << "beta: " << format_complex(report.input_state.beta()) << "\n";
  if (report.outcome) out << "outcome: " << *report.outcome << "\n";
  out << "outcome_probabilities:";
  for (double p : report.outcome_probabilities) out << " " << format_real(p);
  out << "\n";
  out << "fidelity: " << format_real(report.fidelity) << "\n";
  out << "output_entropy_bits: " << format_real(report.output_entropy_bits) << "\n";
  out << "marginal_3:\n" << format_matrix(report.marginal_3.matrix());
  out << "marginal_12:\n" << format_matrix(report.marginal_12.matrix());
  out << "output_density:\n" << format_matrix(report.output_density.matrix());
  return out.str();
}

namespace {

void branch_text(std::ostringstream& out, const char* name, const BranchSummary& b) {
  out << name << ":\n";
  out << "  consumes_bell_pair: " << (b.consumes_bell_pair ? "yes" : "no") << "\n";
  out << "  fidelity: " << format_real(b.fidelity) << "\n";
  out << "  purity_12: " << format_real(b.purity_12) << "\n";
  out << "  entropy_12_bits: " << format_real(b.entropy_12_bits) << "\n";
  out << "  purity_3: " << format_real(b.purity_3) << "\n";
  out << "  entropy_3_bits: " << format_real(b.entropy_3_bits) << "\n";
  out << "  marginal_12:\n" << format_matrix(b.marginal_12.matrix(), "    ");
  out << "  marginal_3:\n" << format_matrix(b.marginal_3.matrix(), "    ");
}

}  // namespace

std::string to_text(const SwapComparison& cmp) {
  std::ostringstream out;
  out << "alpha: " << format_complex(cmp.input.alpha()) << "\n";
  out << "beta: " << format_complex(cmp.input.beta()) << "\n";
  branch_text(out, "teleport", cmp.teleport);
  branch_text(out, "swap", cmp.swap);
  return out.str();
}

}  // namespace qteleport
