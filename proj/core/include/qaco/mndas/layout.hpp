#pragma once

#include <cstddef>
#include <vector>

#include "qaco/mndas/instance.hpp"
#include "qaco/qsim/state.hpp"

namespace qaco::mndas {

using qsim::BasisIndex;
using qsim::Qubit;

/// Fixed qubit map p0..p(x-1), a1, a2, ph0..ph(d-1), a_target, followed by
/// the guard flag when the corrected guard is in use.
///
/// Path ids read p(x-1) as the most significant bit (so path id = the low x
/// bits of the basis index). Box values read ph0 as the most significant bit.
class RegisterLayout {
 public:
  RegisterLayout(std::size_t path_qubits, std::size_t box_qubits, bool guard_flag);

  static RegisterLayout for_instance(const ProblemInstance& instance);

  std::size_t path_qubit_count() const noexcept { return path_qubits_; }
  std::size_t box_qubit_count() const noexcept { return box_qubits_; }
  bool has_guard_flag() const noexcept { return guard_flag_; }
  std::size_t total_qubits() const noexcept { return path_qubits_ + box_qubits_ + 3 + (guard_flag_ ? 1 : 0); }

  Qubit path(std::size_t l) const;
  Qubit a1() const noexcept { return path_qubits_; }
  Qubit a2() const noexcept { return path_qubits_ + 1; }
  Qubit box(std::size_t m) const;
  Qubit target() const noexcept { return path_qubits_ + box_qubits_ + 2; }
  /// Throws std::logic_error when the layout has no guard flag.
  Qubit guard_flag() const;

  std::vector<Qubit> path_register() const;
  std::vector<Qubit> box_register() const;
  /// a1, a2, a_target and the guard flag if present.
  std::vector<Qubit> ancilla_register() const;

  std::size_t read_path(BasisIndex index) const noexcept;
  std::uint64_t read_box(BasisIndex index) const noexcept;
  bool ancillas_clear(BasisIndex index) const noexcept;

  /// Basis index with the given path id and box value, ancillas zero.
  BasisIndex compose(std::size_t path_id, std::uint64_t box_value) const noexcept;

 private:
  std::size_t path_qubits_;
  std::size_t box_qubits_;
  bool guard_flag_;
};

}  // namespace qaco::mndas
