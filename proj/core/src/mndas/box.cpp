#include "qaco/mndas/box.hpp"

#include <bit>
#include <stdexcept>

namespace qaco::mndas {

namespace {

// Bit of ph_m inside a box value (ph0 is the most significant).
std::uint64_t ph_bit(std::size_t m, std::size_t d) { return std::uint64_t{1} << (d - 1 - m); }

void check_width(std::size_t d) {
  if (d < 2 || d > 62) throw std::invalid_argument("box width must be in [2, 62]");
}

}  // namespace

std::uint64_t full_box(std::size_t box_qubits) {
  check_width(box_qubits);
  return (std::uint64_t{1} << box_qubits) - 1;
}

std::uint64_t deposit_step(std::uint64_t box, std::size_t d) {
  check_width(d);
  for (std::size_t m = d - 1; m-- > 0;) {
    if (box & ph_bit(m, d)) box ^= ph_bit(m + 1, d);
  }
  return box ^ ph_bit(0, d);
}

std::uint64_t evaporate_step(std::uint64_t box, std::size_t d) {
  check_width(d);
  box ^= ph_bit(0, d);
  for (std::size_t m = 0; m + 1 < d; ++m) {
    if (box & ph_bit(m, d)) box ^= ph_bit(m + 1, d);
  }
  return box;
}

std::vector<std::uint64_t> box_order(std::size_t box_qubits) {
  const std::uint64_t full = full_box(box_qubits);
  std::vector<std::uint64_t> order{0};
  std::uint64_t box = 0;
  while (box != full) {
    box = deposit_step(box, box_qubits);
    if (box == 0) throw std::logic_error("deposition cycle closed before reaching the full box");
    order.push_back(box);
  }
  return order;
}

std::uint64_t deposits_to_full(std::size_t box_qubits) {
  check_width(box_qubits);
  return (std::uint64_t{1} << (std::bit_width(box_qubits))) - 1;
}

std::string box_bits(std::uint64_t box, std::size_t box_qubits) {
  std::string bits(box_qubits, '0');
  for (std::size_t m = 0; m < box_qubits; ++m) {
    if (box & ph_bit(m, box_qubits)) bits[m] = '1';
  }
  return bits;
}

}  // namespace qaco::mndas
