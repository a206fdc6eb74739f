#pragma once

#include <cstdint>
#include <vector>

#include "qaco/mndas/engine.hpp"
#include "qaco/mndas/instance.hpp"

namespace qaco::mndas {

/// Integer re-derivation of the per-path pheromone box dynamics, with no
/// statevector involved. Each path is tracked as a classical branch holding
/// its two selection ancillas and box value, and the guard logic is replayed
/// bit by bit.
class BoxAutomaton {
 public:
  explicit BoxAutomaton(ProblemInstance instance);

  const ProblemInstance& instance() const noexcept { return instance_; }
  std::uint64_t iteration() const noexcept { return t_; }
  const std::vector<std::uint64_t>& boxes() const noexcept { return boxes_; }

  void set_weight(std::size_t path_id, PathWeight weight) { instance_.set_weight(path_id, weight); }

  /// Advances to iteration t+1.
  void step();

  IterationTrace rows() const;

 private:
  ProblemInstance instance_;
  std::uint64_t t_ = 0;
  std::vector<std::uint64_t> boxes_;
};

/// Trace rows for t = 0..t_max.
IterationTrace classical_box_oracle(const ProblemInstance& instance, std::uint64_t t_max);

}  // namespace qaco::mndas
