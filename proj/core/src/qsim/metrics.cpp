#include "qaco/qsim/metrics.hpp"

#include <algorithm>
#include <vector>

namespace qaco::qsim {

GateMetrics gate_metrics(const Circuit& circuit) {
  GateMetrics metrics;
  std::vector<std::size_t> frontier(circuit.qubit_count(), 0);
  for (const auto& op : circuit.ops()) {
    ++metrics.counts[op.kind];
    ++metrics.total_gates;
    const auto qubits = op.qubits();
    std::size_t layer = 0;
    for (Qubit q : qubits) layer = std::max(layer, frontier[q]);
    ++layer;
    for (Qubit q : qubits) frontier[q] = layer;
    metrics.depth = std::max(metrics.depth, layer);
  }
  return metrics;
}

}  // namespace qaco::qsim
