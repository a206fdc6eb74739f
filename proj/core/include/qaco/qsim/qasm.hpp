#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qaco/qsim/circuit.hpp"

namespace qaco::qsim {

class QasmError : public std::runtime_error {
 public:
  QasmError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// OpenQASM 2.0 text for `circuit`. Registers: `q` for the circuit's qubits,
/// `anc` for the decomposition pool when any MCT has three or more controls
/// (those are always emitted decomposed), `c` for measured qubits in order of
/// first measurement. CPHASE maps to cu1. Output is deterministic.
std::string to_qasm(const Circuit& circuit);

/// Reads back the dialect produced by to_qasm(). `anc[i]` maps to qubit
/// `|q| + i`.
Circuit parse_qasm(std::string_view text);

}  // namespace qaco::qsim
