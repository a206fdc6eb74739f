#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qaco::mndas {

// Integer model of the pheromone box. Values read ph0 as the most
// significant of d bits.

std::uint64_t full_box(std::size_t box_qubits);

/// One deposition cascade applied to a box value (ancilla on).
std::uint64_t deposit_step(std::uint64_t box, std::size_t box_qubits);

/// One evaporation cascade; exact inverse of deposit_step().
std::uint64_t evaporate_step(std::uint64_t box, std::size_t box_qubits);

/// Box values visited by repeated deposition from the empty box up to the
/// full box, inclusive. For d = 4 this is 0, 8, 4, 14, 1, 9, 5, 15.
std::vector<std::uint64_t> box_order(std::size_t box_qubits);

/// Deposits needed to fill an empty box: 2^(floor(log2 d) + 1) - 1.
std::uint64_t deposits_to_full(std::size_t box_qubits);

/// ph0-first bit string of a box value.
std::string box_bits(std::uint64_t box, std::size_t box_qubits);

}  // namespace qaco::mndas
