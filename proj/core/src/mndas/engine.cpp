#include "qaco/mndas/engine.hpp"

#include <cmath>
#include <string>

#include "qaco/mndas/box.hpp"
#include "qaco/mndas/fragments.hpp"
#include "qaco/qsim/decompose.hpp"
#include "qaco/qsim/simulator.hpp"

namespace qaco::mndas {

namespace {

constexpr double kUniformTolerance = 1e-9;

void append_finale(Circuit& program, const RegisterLayout& layout, const EngineModes& modes) {
  program.append(marking_fragment(layout, modes.marking));
  const Circuit diffusion = diffusion_fragment(layout);
  for (std::size_t k = 0; k < modes.grover_iterations; ++k) program.append(diffusion);
  program.append(measurement_fragment(layout));
}

}  // namespace

std::pair<QuantumState, RegisterLayout> init_ant(const ProblemInstance& instance, std::size_t qubit_limit) {
  const auto layout = RegisterLayout::for_instance(instance);
  if (layout.total_qubits() > qubit_limit || layout.total_qubits() > qsim::kMaxQubits) {
    throw SimulatorLimitError("instance needs " + std::to_string(layout.total_qubits()) +
                              " qubits, simulator limit is " + std::to_string(qubit_limit));
  }
  QuantumState state(layout.total_qubits());
  qsim::apply_circuit(state, init_fragment(layout));
  return {std::move(state), layout};
}

void ant_execute(QuantumState& state, std::uint64_t t, const ProblemInstance& instance,
                 const RegisterLayout& layout) {
  qsim::apply_circuit(state, iteration_circuit(t, instance, layout));
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) > qsim::kAmplitudeEpsilon && !layout.ancillas_clear(i)) {
      throw TraceError("iteration " + std::to_string(t) + " left an ancilla raised at basis index " +
                       std::to_string(i));
    }
  }
}

IterationTrace extract_trace(const QuantumState& state, const ProblemInstance& instance,
                             const RegisterLayout& layout, std::uint64_t t) {
  const std::size_t paths = std::size_t{1} << layout.path_qubit_count();
  const double expected = 1.0 / std::sqrt(static_cast<double>(paths));
  std::vector<std::optional<std::uint64_t>> box_of(paths);

  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    const double magnitude = std::abs(amps[i]);
    if (magnitude <= qsim::kAmplitudeEpsilon) continue;
    if (!layout.ancillas_clear(i)) {
      throw TraceError("basis index " + std::to_string(i) + " has a raised ancilla");
    }
    const std::size_t path = layout.read_path(i);
    if (box_of[path]) {
      throw TraceError("path " + std::to_string(path) + " carries more than one box value at t=" +
                       std::to_string(t));
    }
    if (std::abs(magnitude - expected) > kUniformTolerance) {
      throw TraceError("path " + std::to_string(path) + " amplitude " + std::to_string(magnitude) +
                       " is not uniform");
    }
    box_of[path] = layout.read_box(i);
  }

  IterationTrace rows;
  for (std::size_t path = 0; path < paths; ++path) {
    if (!box_of[path]) throw TraceError("path " + std::to_string(path) + " vanished from the state");
    if (instance.is_dummy(path)) continue;
    rows.push_back({t, path, *box_of[path], box_bits(*box_of[path], layout.box_qubit_count())});
  }
  return rows;
}

void mark_and_amplify(QuantumState& state, const RegisterLayout& layout, const EngineModes& modes) {
  qsim::apply_circuit(state, marking_fragment(layout, modes.marking));
  const Circuit diffusion = diffusion_fragment(layout);
  for (std::size_t k = 0; k < modes.grover_iterations; ++k) qsim::apply_circuit(state, diffusion);
}

MndasRun::MndasRun(ProblemInstance instance, std::size_t qubit_limit)
    : instance_(std::move(instance)),
      layout_(RegisterLayout::for_instance(instance_)),
      state_(init_ant(instance_, qubit_limit).first),
      program_(init_fragment(layout_)) {
  last_rows_ = extract_trace(state_, instance_, layout_, 0);
  trace_ = last_rows_;
}

const IterationTrace& MndasRun::step() {
  ++t_;
  const Circuit circuit = iteration_circuit(t_, instance_, layout_);
  qsim::apply_circuit(state_, circuit);
  program_.append(circuit);
  last_rows_ = extract_trace(state_, instance_, layout_, t_);
  trace_.insert(trace_.end(), last_rows_.begin(), last_rows_.end());

  const auto full = full_paths();
  if (!converged_path_ && full.size() == 1) {
    converged_path_ = full.front();
    convergence_iteration_ = t_;
  }
  return last_rows_;
}

std::vector<std::size_t> MndasRun::full_paths() const {
  const std::uint64_t full = full_box(instance_.box_qubits());
  std::vector<std::size_t> out;
  for (const auto& row : last_rows_) {
    if (row.box_value == full) out.push_back(row.path_id);
  }
  return out;
}

RunResult MndasRun::finish() {
  const auto& modes = instance_.modes();
  while (t_ < instance_.iterations()) {
    if (modes.stop == StopRule::FirstFull && converged_path_) break;
    step();
  }

  RunResult result;
  result.converged_path = converged_path_;
  result.convergence_iteration = convergence_iteration_;
  result.iterations_run = t_;
  result.full_paths = full_paths();
  result.trace = trace_;

  QuantumState finale = state_;
  mark_and_amplify(finale, layout_, modes);
  result.histogram = qsim::outcome_probabilities(finale, layout_.path_register());
  result.final_state = std::move(finale);

  result.program = program_;
  append_finale(result.program, layout_, modes);
  result.metrics = qsim::gate_metrics(qsim::decompose_circuit(result.program));
  return result;
}

RunResult run_mndas(const ProblemInstance& instance, std::size_t qubit_limit) {
  MndasRun run(instance, qubit_limit);
  return run.finish();
}

qsim::Circuit build_program(const ProblemInstance& instance, std::uint64_t iterations) {
  const auto layout = RegisterLayout::for_instance(instance);
  Circuit program = init_fragment(layout);
  for (std::uint64_t t = 1; t <= iterations; ++t) program.append(iteration_circuit(t, instance, layout));
  append_finale(program, layout, instance.modes());
  return program;
}

}  // namespace qaco::mndas
