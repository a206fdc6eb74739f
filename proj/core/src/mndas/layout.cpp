#include "qaco/mndas/layout.hpp"

#include <stdexcept>

namespace qaco::mndas {

RegisterLayout::RegisterLayout(std::size_t path_qubits, std::size_t box_qubits, bool guard_flag)
    : path_qubits_(path_qubits), box_qubits_(box_qubits), guard_flag_(guard_flag) {
  if (path_qubits_ == 0) throw std::invalid_argument("layout needs at least one path qubit");
  if (box_qubits_ < 2) throw std::invalid_argument("layout needs at least two box qubits");
}

RegisterLayout RegisterLayout::for_instance(const ProblemInstance& instance) {
  return RegisterLayout(instance.path_qubits(), instance.box_qubits(),
                        instance.modes().guard == GuardMode::Corrected);
}

Qubit RegisterLayout::path(std::size_t l) const {
  if (l >= path_qubits_) throw std::out_of_range("path qubit index out of range");
  return l;
}

Qubit RegisterLayout::box(std::size_t m) const {
  if (m >= box_qubits_) throw std::out_of_range("box qubit index out of range");
  return path_qubits_ + 2 + m;
}

Qubit RegisterLayout::guard_flag() const {
  if (!guard_flag_) throw std::logic_error("layout has no guard flag");
  return path_qubits_ + box_qubits_ + 3;
}

std::vector<Qubit> RegisterLayout::path_register() const {
  std::vector<Qubit> out;
  for (std::size_t l = 0; l < path_qubits_; ++l) out.push_back(path(l));
  return out;
}

std::vector<Qubit> RegisterLayout::box_register() const {
  std::vector<Qubit> out;
  for (std::size_t m = 0; m < box_qubits_; ++m) out.push_back(box(m));
  return out;
}

std::vector<Qubit> RegisterLayout::ancilla_register() const {
  std::vector<Qubit> out{a1(), a2(), target()};
  if (guard_flag_) out.push_back(guard_flag());
  return out;
}

std::size_t RegisterLayout::read_path(BasisIndex index) const noexcept {
  return static_cast<std::size_t>(index & ((BasisIndex{1} << path_qubits_) - 1));
}

std::uint64_t RegisterLayout::read_box(BasisIndex index) const noexcept {
  std::uint64_t value = 0;
  for (std::size_t m = 0; m < box_qubits_; ++m) {
    value = (value << 1) | ((index >> (path_qubits_ + 2 + m)) & 1U);
  }
  return value;
}

bool RegisterLayout::ancillas_clear(BasisIndex index) const noexcept {
  BasisIndex mask = (BasisIndex{1} << a1()) | (BasisIndex{1} << a2()) | (BasisIndex{1} << target());
  if (guard_flag_) mask |= BasisIndex{1} << (path_qubits_ + box_qubits_ + 3);
  return (index & mask) == 0;
}

BasisIndex RegisterLayout::compose(std::size_t path_id, std::uint64_t box_value) const noexcept {
  BasisIndex index = path_id & ((BasisIndex{1} << path_qubits_) - 1);
  for (std::size_t m = 0; m < box_qubits_; ++m) {
    const BasisIndex bit = (box_value >> (box_qubits_ - 1 - m)) & 1U;
    index |= bit << (path_qubits_ + 2 + m);
  }
  return index;
}

}  // namespace qaco::mndas
