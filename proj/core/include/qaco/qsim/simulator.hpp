#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "qaco/qsim/circuit.hpp"
#include "qaco/qsim/state.hpp"

namespace qaco::qsim {

/// Amplitude magnitude below which a basis component counts as empty.
inline constexpr double kAmplitudeEpsilon = 1e-12;

/// Raised when a branchwise reset finds the qubit superposed inside a branch.
class ResetCollision : public std::runtime_error {
 public:
  ResetCollision(Qubit qubit, BasisIndex zero_index, BasisIndex one_index);

  Qubit qubit() const noexcept { return qubit_; }
  BasisIndex zero_index() const noexcept { return zero_index_; }
  BasisIndex one_index() const noexcept { return one_index_; }

 private:
  Qubit qubit_;
  BasisIndex zero_index_;
  BasisIndex one_index_;
};

/// Applies a unitary gate in place. RESET and MEASURE are rejected; use
/// branchwise_reset() or apply_circuit() for those.
void apply_gate(QuantumState& state, const GateOp& op);

/// Deterministic reset of a qubit whose value is a function of the remaining
/// qubits in every branch: each nonzero component is relabelled to the
/// qubit=0 index. Throws ResetCollision if both halves of some pair are
/// populated.
void branchwise_reset(QuantumState& state, Qubit qubit);

/// Runs every op in order. RESET dispatches to branchwise_reset(); MEASURE is
/// deferred (no collapse) and only marks which qubits are read out.
void apply_circuit(QuantumState& state, const Circuit& circuit);

/// Marginal distribution over `qubits`. Entry p holds the probability of the
/// pattern whose bit j is the value of qubits[j].
std::vector<double> outcome_probabilities(const QuantumState& state, std::span<const Qubit> qubits);

using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// Draws `shots` samples of the marginal over `qubits`. Deterministic for a
/// fixed seed on every platform (mt19937_64 with an explicit 53-bit mapping).
Histogram sample(const QuantumState& state, std::span<const Qubit> qubits, std::uint64_t shots,
                 std::uint64_t seed);

}  // namespace qaco::qsim
