#include "qaco/qsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qaco::qsim {

namespace {

// Visits every basis index i < dim with (i & fixed_mask) == fixed_value, in
// increasing order, by enumerating submasks of the free bits.
template <typename Fn>
void for_each_index(BasisIndex dim, BasisIndex fixed_mask, BasisIndex fixed_value, Fn&& fn) {
  const BasisIndex free = (dim - 1) & ~fixed_mask;
  BasisIndex sub = 0;
  do {
    fn(sub | fixed_value);
    sub = (sub - free) & free;
  } while (sub != 0);
}

BasisIndex mask_of(std::span<const Qubit> qubits) {
  BasisIndex mask = 0;
  for (Qubit q : qubits) mask |= BasisIndex{1} << q;
  return mask;
}

void flip_where(std::span<Amplitude> amps, BasisIndex control_mask, Qubit target) {
  const BasisIndex tbit = BasisIndex{1} << target;
  for_each_index(amps.size(), control_mask | tbit, control_mask,
                 [&](BasisIndex i) { std::swap(amps[i], amps[i | tbit]); });
}

}  // namespace

ResetCollision::ResetCollision(Qubit qubit, BasisIndex zero_index, BasisIndex one_index)
    : std::runtime_error("branchwise reset of qubit " + std::to_string(qubit) +
                         " found both basis indices " + std::to_string(zero_index) + " and " +
                         std::to_string(one_index) + " populated"),
      qubit_(qubit),
      zero_index_(zero_index),
      one_index_(one_index) {}

void apply_gate(QuantumState& state, const GateOp& op) {
  validate(op, state.qubit_count());
  auto amps = state.amplitudes();
  const BasisIndex tbit = BasisIndex{1} << op.target;
  switch (op.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::CCNOT:
    case GateKind::MCT:
      flip_where(amps, mask_of(op.controls), op.target);
      break;
    case GateKind::H: {
      constexpr double s = std::numbers::sqrt2 / 2.0;
      for_each_index(amps.size(), tbit, 0, [&](BasisIndex i) {
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | tbit];
        amps[i] = s * (a0 + a1);
        amps[i | tbit] = s * (a0 - a1);
      });
      break;
    }
    case GateKind::CPHASE: {
      const Amplitude phase{std::cos(op.angle), std::sin(op.angle)};
      const BasisIndex both = mask_of(op.controls) | tbit;
      for_each_index(amps.size(), both, both, [&](BasisIndex i) { amps[i] *= phase; });
      break;
    }
    case GateKind::RESET:
    case GateKind::MEASURE:
      throw std::invalid_argument(describe(op) + " is not a unitary gate");
  }
}

void branchwise_reset(QuantumState& state, Qubit qubit) {
  if (qubit >= state.qubit_count()) {
    throw std::invalid_argument("reset qubit " + std::to_string(qubit) + " out of range");
  }
  auto amps = state.amplitudes();
  const BasisIndex bit = BasisIndex{1} << qubit;
  // Check the whole state first so a violation leaves it untouched.
  for_each_index(amps.size(), bit, 0, [&](BasisIndex i) {
    if (std::abs(amps[i]) > kAmplitudeEpsilon && std::abs(amps[i | bit]) > kAmplitudeEpsilon) {
      throw ResetCollision(qubit, i, i | bit);
    }
  });
  for_each_index(amps.size(), bit, 0, [&](BasisIndex i) {
    amps[i] += amps[i | bit];
    amps[i | bit] = Amplitude{0.0, 0.0};
  });
}

void apply_circuit(QuantumState& state, const Circuit& circuit) {
  if (circuit.qubit_count() != state.qubit_count()) {
    throw std::invalid_argument("circuit has " + std::to_string(circuit.qubit_count()) +
                                " qubits, state has " + std::to_string(state.qubit_count()));
  }
  for (const auto& op : circuit.ops()) {
    switch (op.kind) {
      case GateKind::RESET: branchwise_reset(state, op.target); break;
      case GateKind::MEASURE: break;
      default: apply_gate(state, op); break;
    }
  }
}

std::vector<double> outcome_probabilities(const QuantumState& state, std::span<const Qubit> qubits) {
  BasisIndex seen = 0;
  for (Qubit q : qubits) {
    if (q >= state.qubit_count()) throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
    if (seen & (BasisIndex{1} << q)) throw std::invalid_argument("duplicate qubit " + std::to_string(q));
    seen |= BasisIndex{1} << q;
  }

  std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::size_t pattern = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
      pattern |= static_cast<std::size_t>((i >> qubits[j]) & 1U) << j;
    }
    probs[pattern] += p;
  }
  return probs;
}

Histogram sample(const QuantumState& state, std::span<const Qubit> qubits, std::uint64_t shots,
                 std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  const auto probs = outcome_probabilities(state, qubits);
  std::vector<double> cdf(probs.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    cdf[i] = running;
  }
  std::mt19937_64 rng(seed);
  Histogram histogram;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto pattern = std::min<std::ptrdiff_t>(it - cdf.begin(), std::ssize(cdf) - 1);
    ++histogram[static_cast<std::uint64_t>(pattern)];
  }
  return histogram;
}

}  // namespace qaco::qsim
