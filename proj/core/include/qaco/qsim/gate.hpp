#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qaco/qsim/state.hpp"

namespace qaco::qsim {

enum class GateKind { X, H, CNOT, CCNOT, MCT, CPHASE, RESET, MEASURE };

inline constexpr GateKind kAllGateKinds[] = {GateKind::X,      GateKind::H,     GateKind::CNOT,
                                             GateKind::CCNOT,  GateKind::MCT,   GateKind::CPHASE,
                                             GateKind::RESET,  GateKind::MEASURE};

std::string_view to_string(GateKind kind) noexcept;

/// One instruction of a reversible-gate program.
///
/// Construct through the factory functions: they normalise multi-controlled
/// NOTs so that one control is always a CNOT and two controls a CCNOT, which
/// keeps per-kind gate counts meaningful.
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<Qubit> controls;
  Qubit target = 0;
  double angle = 0.0;  // CPHASE only

  static GateOp x(Qubit target);
  static GateOp h(Qubit target);
  static GateOp cnot(Qubit control, Qubit target);
  static GateOp ccnot(Qubit control0, Qubit control1, Qubit target);
  /// NOT on `target` conditioned on every control being |1>. An empty control
  /// list degenerates to X.
  static GateOp mct(std::vector<Qubit> controls, Qubit target);
  static GateOp cphase(Qubit control, Qubit target, double angle);
  static GateOp reset(Qubit target);
  static GateOp measure(Qubit target);

  /// Controls followed by the target.
  std::vector<Qubit> qubits() const;

  bool is_controlled_not() const noexcept {
    return kind == GateKind::CNOT || kind == GateKind::CCNOT || kind == GateKind::MCT;
  }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Throws std::invalid_argument on an out-of-range index, a repeated index,
/// or a control count that contradicts the gate kind.
void validate(const GateOp& op, std::size_t qubit_count);

std::string describe(const GateOp& op);

}  // namespace qaco::qsim
