#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qaco/qsim/gate.hpp"

namespace qaco::qsim {

/// Ordered gate program over `qubit_count` indexed qubits. Every appended
/// operation is validated against the register width.
class Circuit {
 public:
  explicit Circuit(std::size_t qubit_count = 0) : qubit_count_(qubit_count) {}

  std::size_t qubit_count() const noexcept { return qubit_count_; }
  std::span<const GateOp> ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

  Circuit& add(GateOp op);
  /// Appends every op of `other`; `other` must not be wider than this circuit.
  Circuit& append(const Circuit& other);

  /// Grows the register; existing ops stay valid.
  void widen(std::size_t qubit_count);

  /// Qubits named by MEASURE ops, in order of first measurement.
  std::vector<Qubit> measured_qubits() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t qubit_count_ = 0;
  std::vector<GateOp> ops_;
};

}  // namespace qaco::qsim
