#include "qaco/qsim/state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qaco::qsim {

QuantumState::QuantumState(std::size_t qubit_count, BasisIndex basis_index) : qubit_count_(qubit_count) {
  if (qubit_count == 0 || qubit_count > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                std::to_string(qubit_count));
  }
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (basis_index >= dim) {
    throw std::invalid_argument("basis index " + std::to_string(basis_index) + " out of range");
  }
  amplitudes_.assign(dim, Amplitude{0.0, 0.0});
  amplitudes_[basis_index] = Amplitude{1.0, 0.0};
}

QuantumState QuantumState::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("amplitude vector length must be a power of two >= 2");
  }
  const auto qubits = static_cast<std::size_t>(std::countr_zero(dim));
  if (qubits > kMaxQubits) {
    throw std::invalid_argument("amplitude vector exceeds the qubit limit");
  }
  QuantumState state;
  state.qubit_count_ = qubits;
  state.amplitudes_ = std::move(amplitudes);
  return state;
}

double QuantumState::norm_squared() const noexcept {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

bool QuantumState::is_finite() const noexcept {
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  }
  return true;
}

}  // namespace qaco::qsim
