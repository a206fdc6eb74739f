#include "qaco/mndas/instance.hpp"

#include <bit>
#include <stdexcept>

namespace qaco::mndas {

PathWeight::PathWeight(std::uint64_t value) : value_(value) {
  if (value == 0) throw std::invalid_argument("finite path weights must be >= 1");
}

std::uint64_t PathWeight::value() const {
  if (!is_finite()) throw std::logic_error("infinite path weight has no value");
  return value_;
}

std::string PathWeight::to_string() const { return is_finite() ? std::to_string(value_) : "inf"; }

EvaporationPolicy EvaporationPolicy::every(std::uint64_t period) {
  if (period == 0) throw std::invalid_argument("evaporation period must be >= 1");
  return {EvaporationKind::Period, period};
}

bool EvaporationPolicy::active_at(std::uint64_t t) const noexcept {
  switch (kind) {
    case EvaporationKind::Verbatim: return true;
    case EvaporationKind::Period: return t % period == 0;
    case EvaporationKind::None: return false;
  }
  return false;
}

std::string EvaporationPolicy::to_string() const {
  switch (kind) {
    case EvaporationKind::Verbatim: return "verbatim";
    case EvaporationKind::Period: return "period:" + std::to_string(period);
    case EvaporationKind::None: return "none";
  }
  return "?";
}

std::string to_string(GuardMode mode) { return mode == GuardMode::Verbatim ? "verbatim" : "corrected"; }

std::string to_string(MarkingMode mode) { return mode == MarkingMode::VerbatimMsb ? "verbatim_msb" : "flag_z"; }

std::string to_string(StopRule rule) { return rule == StopRule::FixedK ? "fixed_k" : "first_full"; }

ProblemInstance::ProblemInstance(std::vector<PathWeight> weights, std::uint64_t iterations,
                                 std::size_t box_qubits, EngineModes modes)
    : declared_paths_(weights.size()),
      path_qubits_(0),
      weights_(std::move(weights)),
      iterations_(iterations),
      box_qubits_(box_qubits),
      modes_(modes) {
  if (declared_paths_ < 2) throw std::invalid_argument("at least two paths are required");
  if (iterations_ < 1) throw std::invalid_argument("iteration budget must be >= 1");
  if (box_qubits_ < 2) throw std::invalid_argument("pheromone box needs at least two qubits");
  if (box_qubits_ > 62) throw std::invalid_argument("pheromone box too wide");
  if (modes_.evaporation.kind == EvaporationKind::Period && modes_.evaporation.period == 0) {
    throw std::invalid_argument("evaporation period must be >= 1");
  }
  const std::size_t padded = std::bit_ceil(declared_paths_);
  path_qubits_ = static_cast<std::size_t>(std::countr_zero(padded));
  weights_.resize(padded, PathWeight::infinite());
}

ProblemInstance ProblemInstance::from_costs(std::span<const std::uint64_t> costs, std::uint64_t iterations,
                                            std::size_t box_qubits, EngineModes modes) {
  std::vector<PathWeight> weights;
  weights.reserve(costs.size());
  for (auto c : costs) weights.emplace_back(c);
  return ProblemInstance(std::move(weights), iterations, box_qubits, modes);
}

bool ProblemInstance::is_dummy(std::size_t path_id) const noexcept {
  return path_id >= declared_paths_ && path_id < weights_.size() && !weights_[path_id].is_finite();
}

void ProblemInstance::set_weight(std::size_t path_id, PathWeight weight) {
  if (path_id >= weights_.size()) {
    throw std::out_of_range("path id " + std::to_string(path_id) + " out of range");
  }
  weights_[path_id] = weight;
}

std::vector<std::size_t> select_paths(std::uint64_t t, std::span<const PathWeight> weights) {
  if (t == 0) throw std::invalid_argument("iterations are numbered from 1");
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].is_finite() && t % weights[i].value() == 0) selected.push_back(i);
  }
  return selected;
}

}  // namespace qaco::mndas
