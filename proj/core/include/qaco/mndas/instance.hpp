#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qaco::mndas {

/// Path cost; the infinite weight marks a removed or padding path that is
/// never selected.
class PathWeight {
 public:
  constexpr PathWeight() = default;
  explicit PathWeight(std::uint64_t value);

  static constexpr PathWeight infinite() noexcept { return PathWeight(); }

  constexpr bool is_finite() const noexcept { return value_ != 0; }
  /// Throws std::logic_error for the infinite weight.
  std::uint64_t value() const;

  std::string to_string() const;

  friend constexpr bool operator==(PathWeight, PathWeight) = default;

 private:
  std::uint64_t value_ = 0;  // 0 encodes infinity; finite weights are >= 1
};

enum class EvaporationKind { Verbatim, Period, None };

struct EvaporationPolicy {
  EvaporationKind kind = EvaporationKind::None;
  std::uint64_t period = 1;  // Period only

  static EvaporationPolicy verbatim() noexcept { return {EvaporationKind::Verbatim, 1}; }
  static EvaporationPolicy every(std::uint64_t period);
  static EvaporationPolicy none() noexcept { return {EvaporationKind::None, 1}; }

  /// Whether iteration t carries the evaporation sub-circuit.
  bool active_at(std::uint64_t t) const noexcept;

  std::string to_string() const;
  friend bool operator==(const EvaporationPolicy&, const EvaporationPolicy&) = default;
};

enum class GuardMode { Verbatim, Corrected };
enum class MarkingMode { VerbatimMsb, FlagZ };
enum class StopRule { FixedK, FirstFull };

std::string to_string(GuardMode mode);
std::string to_string(MarkingMode mode);
std::string to_string(StopRule rule);

struct EngineModes {
  EvaporationPolicy evaporation = EvaporationPolicy::none();
  GuardMode guard = GuardMode::Corrected;
  MarkingMode marking = MarkingMode::FlagZ;
  StopRule stop = StopRule::FirstFull;
  std::size_t grover_iterations = 1;

  friend bool operator==(const EngineModes&, const EngineModes&) = default;
};

/// n parallel source-to-destination paths with integer weights, padded with
/// infinite-weight dummies up to 2^x where x = ceil(log2 n).
class ProblemInstance {
 public:
  ProblemInstance(std::vector<PathWeight> weights, std::uint64_t iterations, std::size_t box_qubits,
                  EngineModes modes = {});

  /// Convenience for all-finite instances.
  static ProblemInstance from_costs(std::span<const std::uint64_t> costs, std::uint64_t iterations,
                                    std::size_t box_qubits, EngineModes modes = {});

  std::size_t declared_paths() const noexcept { return declared_paths_; }
  std::size_t path_qubits() const noexcept { return path_qubits_; }
  std::size_t padded_paths() const noexcept { return weights_.size(); }
  std::uint64_t iterations() const noexcept { return iterations_; }
  std::size_t box_qubits() const noexcept { return box_qubits_; }
  const EngineModes& modes() const noexcept { return modes_; }
  EngineModes& modes() noexcept { return modes_; }

  /// Padded weight list (length 2^x).
  std::span<const PathWeight> weights() const noexcept { return weights_; }
  PathWeight weight(std::size_t path_id) const { return weights_.at(path_id); }

  /// Padding path that has not been given a finite weight.
  bool is_dummy(std::size_t path_id) const noexcept;

  /// Replaces a weight; infinity removes the path from future selection. Any
  /// padded id is accepted so a dummy can be brought into play.
  void set_weight(std::size_t path_id, PathWeight weight);

 private:
  std::size_t declared_paths_;
  std::size_t path_qubits_;
  std::vector<PathWeight> weights_;
  std::uint64_t iterations_;
  std::size_t box_qubits_;
  EngineModes modes_;
};

/// Paths chosen at iteration t: finite weight dividing t.
std::vector<std::size_t> select_paths(std::uint64_t t, std::span<const PathWeight> weights);

}  // namespace qaco::mndas
