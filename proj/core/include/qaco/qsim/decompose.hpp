#pragma once

#include <cstddef>
#include <span>

#include "qaco/qsim/circuit.hpp"

namespace qaco::qsim {

/// Number of clean ancillas decompose_mct() needs for `control_count` controls.
std::size_t mct_ancillas_needed(std::size_t control_count) noexcept;

/// Compute-copy-uncompute realisation of a multi-controlled NOT with CCNOT and
/// CNOT gates only. For k >= 3 controls the AND of the controls is chained
/// through k-1 ancillas, copied onto the target with a CNOT, and the chain is
/// undone so the ancillas return to |0>. The returned circuit is sized to the
/// largest index involved.
Circuit decompose_mct(std::span<const Qubit> controls, Qubit target, std::span<const Qubit> ancillas);

/// Rewrites every MCT with three or more controls through decompose_mct(),
/// drawing ancillas from a pool appended after the original register. The
/// result is `circuit.qubit_count() + ancilla_pool_size(circuit)` wide.
Circuit decompose_circuit(const Circuit& circuit);

std::size_t ancilla_pool_size(const Circuit& circuit) noexcept;

}  // namespace qaco::qsim
