#pragma once

#include <cstddef>
#include <map>

#include "qaco/qsim/circuit.hpp"

namespace qaco::qsim {

struct GateMetrics {
  std::map<GateKind, std::size_t> counts;
  std::size_t total_gates = 0;
  /// Greedy layering: an op lands one layer after the latest op sharing any
  /// of its qubits.
  std::size_t depth = 0;

  std::size_t count(GateKind kind) const {
    auto it = counts.find(kind);
    return it == counts.end() ? 0 : it->second;
  }
};

GateMetrics gate_metrics(const Circuit& circuit);

}  // namespace qaco::qsim
