#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qaco/mndas/instance.hpp"
#include "qaco/mndas/layout.hpp"
#include "qaco/qsim/circuit.hpp"
#include "qaco/qsim/metrics.hpp"
#include "qaco/qsim/state.hpp"

namespace qaco::mndas {

using qsim::QuantumState;

inline constexpr std::size_t kDefaultQubitLimit = 26;

/// The layout does not fit under the configured qubit limit.
class SimulatorLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The state lost the one-box-per-path structure the engine relies on.
class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceRow {
  std::uint64_t t = 0;
  std::size_t path_id = 0;
  std::uint64_t box_value = 0;
  std::string box_bits;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

using IterationTrace = std::vector<TraceRow>;

struct RunResult {
  std::optional<std::size_t> converged_path;
  std::optional<std::uint64_t> convergence_iteration;
  std::uint64_t iterations_run = 0;
  /// Paths whose box is full after the last iteration.
  std::vector<std::size_t> full_paths;
  /// Outcome probability per path id (2^x entries, dummies included).
  std::vector<double> histogram;
  IterationTrace trace;
  /// Metrics of the full program with MCTs decomposed.
  qsim::GateMetrics metrics;
  /// Full program (init, iterations, marking, amplification, measurement).
  qsim::Circuit program;
  /// Post-amplification state.
  std::optional<QuantumState> final_state;
};

/// |0...0> followed by H on every path qubit.
std::pair<QuantumState, RegisterLayout> init_ant(const ProblemInstance& instance,
                                                 std::size_t qubit_limit = kDefaultQubitLimit);

/// Applies iteration_circuit(t) and checks ancilla hygiene.
void ant_execute(QuantumState& state, std::uint64_t t, const ProblemInstance& instance,
                 const RegisterLayout& layout);

/// Box value per non-dummy path recovered from a post-iteration state.
IterationTrace extract_trace(const QuantumState& state, const ProblemInstance& instance,
                             const RegisterLayout& layout, std::uint64_t t);

/// Marking followed by `modes.grover_iterations` diffusion rounds.
void mark_and_amplify(QuantumState& state, const RegisterLayout& layout, const EngineModes& modes);

/// Stepwise driver; lets callers change weights between iterations.
class MndasRun {
 public:
  explicit MndasRun(ProblemInstance instance, std::size_t qubit_limit = kDefaultQubitLimit);

  const ProblemInstance& instance() const noexcept { return instance_; }
  const RegisterLayout& layout() const noexcept { return layout_; }
  const QuantumState& state() const noexcept { return state_; }
  const IterationTrace& trace() const noexcept { return trace_; }
  std::uint64_t iteration() const noexcept { return t_; }

  void set_weight(std::size_t path_id, PathWeight weight) { instance_.set_weight(path_id, weight); }

  /// Runs iteration t+1 and returns its trace rows.
  const IterationTrace& step();

  /// Non-dummy paths with a full box after the latest iteration.
  std::vector<std::size_t> full_paths() const;

  /// Steps until the stop rule or the iteration budget ends the loop, then
  /// marks, amplifies and measures.
  RunResult finish();

 private:
  ProblemInstance instance_;
  RegisterLayout layout_;
  QuantumState state_;
  std::uint64_t t_ = 0;
  IterationTrace trace_;
  IterationTrace last_rows_;
  qsim::Circuit program_;
  std::optional<std::size_t> converged_path_;
  std::optional<std::uint64_t> convergence_iteration_;
};

RunResult run_mndas(const ProblemInstance& instance, std::size_t qubit_limit = kDefaultQubitLimit);

/// Circuit of the whole program for `iterations` iterations without running it.
qsim::Circuit build_program(const ProblemInstance& instance, std::uint64_t iterations);

}  // namespace qaco::mndas
