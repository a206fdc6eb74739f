#include "qaco/qsim/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaco::qsim {

Circuit& Circuit::add(GateOp op) {
  validate(op, qubit_count_);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.qubit_count_ > qubit_count_) {
    throw std::invalid_argument("cannot append a wider circuit");
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

void Circuit::widen(std::size_t qubit_count) {
  if (qubit_count < qubit_count_) throw std::invalid_argument("widen() cannot shrink a circuit");
  qubit_count_ = qubit_count;
}

std::vector<Qubit> Circuit::measured_qubits() const {
  std::vector<Qubit> measured;
  for (const auto& op : ops_) {
    if (op.kind == GateKind::MEASURE &&
        std::find(measured.begin(), measured.end(), op.target) == measured.end()) {
      measured.push_back(op.target);
    }
  }
  return measured;
}

}  // namespace qaco::qsim
