#include "qaco/qsim/gate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaco::qsim {

std::string_view to_string(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CCNOT: return "CCNOT";
    case GateKind::MCT: return "MCT";
    case GateKind::CPHASE: return "CPHASE";
    case GateKind::RESET: return "RESET";
    case GateKind::MEASURE: return "MEASURE";
  }
  return "?";
}

GateOp GateOp::x(Qubit target) { return GateOp{GateKind::X, {}, target, 0.0}; }

GateOp GateOp::h(Qubit target) { return GateOp{GateKind::H, {}, target, 0.0}; }

GateOp GateOp::cnot(Qubit control, Qubit target) { return GateOp{GateKind::CNOT, {control}, target, 0.0}; }

GateOp GateOp::ccnot(Qubit control0, Qubit control1, Qubit target) {
  return GateOp{GateKind::CCNOT, {control0, control1}, target, 0.0};
}

GateOp GateOp::mct(std::vector<Qubit> controls, Qubit target) {
  switch (controls.size()) {
    case 0: return x(target);
    case 1: return cnot(controls[0], target);
    case 2: return ccnot(controls[0], controls[1], target);
    default: return GateOp{GateKind::MCT, std::move(controls), target, 0.0};
  }
}

GateOp GateOp::cphase(Qubit control, Qubit target, double angle) {
  return GateOp{GateKind::CPHASE, {control}, target, angle};
}

GateOp GateOp::reset(Qubit target) { return GateOp{GateKind::RESET, {}, target, 0.0}; }

GateOp GateOp::measure(Qubit target) { return GateOp{GateKind::MEASURE, {}, target, 0.0}; }

std::vector<Qubit> GateOp::qubits() const {
  std::vector<Qubit> all = controls;
  all.push_back(target);
  return all;
}

void validate(const GateOp& op, std::size_t qubit_count) {
  const std::size_t n = op.controls.size();
  bool arity_ok = false;
  switch (op.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::RESET:
    case GateKind::MEASURE: arity_ok = n == 0; break;
    case GateKind::CNOT:
    case GateKind::CPHASE: arity_ok = n == 1; break;
    case GateKind::CCNOT: arity_ok = n == 2; break;
    case GateKind::MCT: arity_ok = n >= 1; break;
  }
  if (!arity_ok) {
    throw std::invalid_argument(describe(op) + ": control count " + std::to_string(n) + " invalid for " +
                                std::string(to_string(op.kind)));
  }
  auto qubits = op.qubits();
  for (Qubit q : qubits) {
    if (q >= qubit_count) {
      throw std::invalid_argument(describe(op) + ": qubit " + std::to_string(q) + " out of range for " +
                                  std::to_string(qubit_count) + " qubits");
    }
  }
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw std::invalid_argument(describe(op) + ": duplicate qubit index");
  }
}

std::string describe(const GateOp& op) {
  std::ostringstream out;
  out << to_string(op.kind) << '(';
  for (Qubit c : op.controls) out << c << ',';
  out << op.target;
  if (op.kind == GateKind::CPHASE) out << ";" << op.angle;
  out << ')';
  return out.str();
}

}  // namespace qaco::qsim
