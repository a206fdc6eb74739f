#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qaco/aco/classical.hpp"
#include "qaco/app/config.hpp"
#include "qaco/mndas/engine.hpp"
#include "qaco/qsim/simulator.hpp"

namespace qaco::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

// Artifact formatting. All output is deterministic for a given input.

/// Header `t,path_id,box_value,box_bits`.
std::string trace_csv(const mndas::IterationTrace& trace);
/// Header `path_id,bits,probability,counts`; bits are p(x-1) first.
std::string histogram_csv(std::span<const double> probabilities, const qsim::Histogram& counts,
                          std::size_t path_qubits);
std::string metrics_json(const qsim::GateMetrics& metrics, std::size_t qubits);
/// Paths whose probability is within 1e-12 of the maximum.
std::vector<std::size_t> argmax_paths(std::span<const double> probabilities);
std::string path_bits(std::size_t path_id, std::size_t path_qubits);

struct RunReport {
  mndas::RunResult result;
  qsim::Histogram counts;
  std::vector<std::size_t> argmax;
  std::string summary;
};

/// Runs the engine and writes histogram.csv, trace.csv, metrics.json and
/// summary.txt under `config.output_dir`.
RunReport cmd_run(const ExperimentConfig& config);

/// Iteration trace up to the stop rule, from the statevector or (with
/// `oracle`) from the classical box automaton. Writes trace.csv.
mndas::IterationTrace cmd_trace(const ExperimentConfig& config, bool oracle);

struct QasmScope {
  enum class Kind { Init, Iteration, Full };
  Kind kind = Kind::Full;
  std::uint64_t iteration = 0;

  /// `init`, `iteration:<t>` or `full`.
  static QasmScope parse(std::string_view text);
};

/// Writes circuit.qasm and returns its text.
std::string cmd_qasm(const ExperimentConfig& config, QasmScope scope);

/// Writes classical.csv (`path_id,weight,frequency,tau`).
aco::AcoResult cmd_classical(const ExperimentConfig& config);

/// box_order(d), one `value,bits` line per step.
std::string order_text(std::size_t box_qubits);

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t iterations = 0;
  std::size_t total_gates = 0;
  std::size_t depth = 0;
};

struct BenchFit {
  std::size_t n = 0;
  std::int64_t per_iteration = 0;  // c1 in total = K * c1 + c0
  std::int64_t constant = 0;       // c0
  bool exact = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchFit> fits;  // one per n, in ascending n
  bool linear = false;         // every fit exact
  bool monotone = false;       // per_iteration strictly increasing in n
};

/// Gate counts of the decomposed program for every (n, K) on the instance
/// with all n weights equal to 1, so every iteration selects every path.
/// Box width and modes come from `config`. Writes bench.csv.
BenchReport cmd_bench(const ExperimentConfig& config, std::span<const std::size_t> n_list,
                      std::span<const std::uint64_t> k_list);

}  // namespace qaco::app
