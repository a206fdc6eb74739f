#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qaco::qsim {

using Amplitude = std::complex<double>;
using Qubit = std::size_t;
using BasisIndex = std::uint64_t;

/// Hard ceiling for a dense statevector held by this library.
inline constexpr std::size_t kMaxQubits = 30;

/// Dense statevector over 2^q basis states.
///
/// Basis convention: qubit k contributes bit k of the basis index, so qubit 0
/// is the least significant bit. Every module in the project reads and
/// writes basis indices through this convention.
class QuantumState {
 public:
  /// |basis_index> on `qubit_count` qubits.
  explicit QuantumState(std::size_t qubit_count, BasisIndex basis_index = 0);

  /// Takes ownership of an explicit amplitude vector. The length must be a
  /// power of two; the vector is not renormalised.
  static QuantumState from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t qubit_count() const noexcept { return qubit_count_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }

  const Amplitude& operator[](BasisIndex index) const { return amplitudes_.at(index); }

  double norm_squared() const noexcept;

  /// True when every amplitude is finite.
  bool is_finite() const noexcept;

 private:
  QuantumState() = default;

  std::size_t qubit_count_ = 0;
  std::vector<Amplitude> amplitudes_;
};

}  // namespace qaco::qsim
