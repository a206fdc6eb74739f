#include "qaco/qsim/decompose.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qaco::qsim {

std::size_t mct_ancillas_needed(std::size_t control_count) noexcept {
  return control_count >= 3 ? control_count - 1 : 0;
}

Circuit decompose_mct(std::span<const Qubit> controls, Qubit target, std::span<const Qubit> ancillas) {
  const std::size_t k = controls.size();
  if (k == 0) throw std::invalid_argument("decompose_mct needs at least one control");
  const std::size_t needed = mct_ancillas_needed(k);
  if (ancillas.size() < needed) {
    throw std::invalid_argument("decompose_mct: " + std::to_string(k) + " controls need " +
                                std::to_string(needed) + " ancillas, got " + std::to_string(ancillas.size()));
  }
  std::vector<Qubit> all(controls.begin(), controls.end());
  all.push_back(target);
  all.insert(all.end(), ancillas.begin(), ancillas.begin() + static_cast<std::ptrdiff_t>(needed));
  {
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("decompose_mct: controls, target and ancillas overlap");
    }
  }
  Circuit out(*std::max_element(all.begin(), all.end()) + 1);
  if (k == 1) return out.add(GateOp::cnot(controls[0], target)), out;
  if (k == 2) return out.add(GateOp::ccnot(controls[0], controls[1], target)), out;

  // anc[j] holds c0 & ... & c(j+1).
  std::vector<GateOp> compute;
  compute.push_back(GateOp::ccnot(controls[0], controls[1], ancillas[0]));
  for (std::size_t j = 2; j < k; ++j) {
    compute.push_back(GateOp::ccnot(controls[j], ancillas[j - 2], ancillas[j - 1]));
  }
  for (const auto& op : compute) out.add(op);
  out.add(GateOp::cnot(ancillas[k - 2], target));
  for (auto it = compute.rbegin(); it != compute.rend(); ++it) out.add(*it);
  return out;
}

std::size_t ancilla_pool_size(const Circuit& circuit) noexcept {
  std::size_t pool = 0;
  for (const auto& op : circuit.ops()) {
    if (op.kind == GateKind::MCT) pool = std::max(pool, mct_ancillas_needed(op.controls.size()));
  }
  return pool;
}

Circuit decompose_circuit(const Circuit& circuit) {
  const std::size_t base = circuit.qubit_count();
  const std::size_t pool = ancilla_pool_size(circuit);
  std::vector<Qubit> ancillas(pool);
  for (std::size_t i = 0; i < pool; ++i) ancillas[i] = base + i;

  Circuit out(base + pool);
  for (const auto& op : circuit.ops()) {
    if (op.kind != GateKind::MCT) {
      out.add(op);
      continue;
    }
    const Circuit part = decompose_mct(op.controls, op.target, ancillas);
    for (const auto& g : part.ops()) out.add(g);
  }
  return out;
}

}  // namespace qaco::qsim
