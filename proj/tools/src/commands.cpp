#include "qaco/app/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qaco/mndas/box.hpp"
#include "qaco/mndas/fragments.hpp"
#include "qaco/mndas/oracle.hpp"
#include "qaco/qsim/decompose.hpp"
#include "qaco/qsim/qasm.hpp"

namespace qaco::app {

namespace {

constexpr double kTieTolerance = 1e-12;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file(const std::filesystem::path& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

bool stop_now(const ExperimentConfig& config, std::size_t full_count) {
  return config.modes.stop == mndas::StopRule::FirstFull && full_count == 1;
}

aco::AcoParams classical_params(const ExperimentConfig& config) {
  aco::AcoParams p = config.classical;
  p.seed = config.seed;
  return p;
}

}  // namespace

std::string path_bits(std::size_t path_id, std::size_t path_qubits) {
  std::string bits(path_qubits, '0');
  for (std::size_t l = 0; l < path_qubits; ++l) {
    if ((path_id >> l) & 1U) bits[path_qubits - 1 - l] = '1';
  }
  return bits;
}

std::string trace_csv(const mndas::IterationTrace& trace) {
  std::ostringstream out;
  out << "t,path_id,box_value,box_bits\n";
  for (const auto& row : trace) out << row.t << ',' << row.path_id << ',' << row.box_value << ',' << row.box_bits << '\n';
  return out.str();
}

std::string histogram_csv(std::span<const double> probabilities, const qsim::Histogram& counts,
                          std::size_t path_qubits) {
  std::ostringstream out;
  out << "path_id,bits,probability,counts\n";
  for (std::size_t p = 0; p < probabilities.size(); ++p) {
    const auto it = counts.find(p);
    out << p << ',' << path_bits(p, path_qubits) << ',' << fmt(probabilities[p]) << ','
        << (it == counts.end() ? 0 : it->second) << '\n';
  }
  return out.str();
}

std::string metrics_json(const qsim::GateMetrics& metrics, std::size_t qubits) {
  nlohmann::ordered_json j;
  j["qubits"] = qubits;
  j["total_gates"] = metrics.total_gates;
  j["depth"] = metrics.depth;
  auto& counts = j["counts"];
  counts = nlohmann::ordered_json::object();
  for (qsim::GateKind kind : qsim::kAllGateKinds) {
    if (const auto n = metrics.count(kind); n > 0) counts[std::string(qsim::to_string(kind))] = n;
  }
  return j.dump(2) + "\n";
}

std::vector<std::size_t> argmax_paths(std::span<const double> probabilities) {
  std::vector<std::size_t> out;
  if (probabilities.empty()) return out;
  const double top = *std::max_element(probabilities.begin(), probabilities.end());
  for (std::size_t p = 0; p < probabilities.size(); ++p) {
    if (top - probabilities[p] <= kTieTolerance) out.push_back(p);
  }
  return out;
}

RunReport cmd_run(const ExperimentConfig& config) {
  const auto instance = config.instance();
  RunReport report;
  report.result = mndas::run_mndas(instance);
  const auto& r = report.result;
  const std::size_t x = instance.path_qubits();
  const auto layout = mndas::RegisterLayout::for_instance(instance);
  report.counts = qsim::sample(*r.final_state, layout.path_register(), config.shots, config.seed);
  report.argmax = argmax_paths(r.histogram);

  std::vector<std::string> argmax_bits;
  for (std::size_t p : report.argmax) argmax_bits.push_back(path_bits(p, x));
  std::vector<std::string> full;
  for (std::size_t p : r.full_paths) full.push_back(std::to_string(p));
  const double top = r.histogram[report.argmax.front()];

  std::ostringstream line;
  if (r.converged_path) {
    line << "converged to path " << *r.converged_path << " (" << path_bits(*r.converged_path, x) << ") at t="
         << *r.convergence_iteration;
  } else {
    line << "no convergence within K=" << instance.iterations();
  }
  line << "; argmax " << join(argmax_bits, ",") << " p=" << fmt(top);
  if (report.argmax.size() > 1) line << " (tie of " << report.argmax.size() << ")";
  report.summary = line.str();

  std::ostringstream summary;
  summary << "summary=" << report.summary << '\n'
          << "converged_path=" << (r.converged_path ? std::to_string(*r.converged_path) : "none") << '\n'
          << "convergence_iteration="
          << (r.convergence_iteration ? std::to_string(*r.convergence_iteration) : "none") << '\n'
          << "iterations_run=" << r.iterations_run << '\n'
          << "full_paths=" << join(full, ",") << '\n'
          << "argmax=" << join(argmax_bits, ",") << '\n'
          << "argmax_probability=" << fmt(top) << '\n'
          << "shots=" << config.shots << '\n'
          << "seed=" << config.seed << '\n';

  write_file(config.output_dir, "histogram.csv", histogram_csv(r.histogram, report.counts, x));
  write_file(config.output_dir, "trace.csv", trace_csv(r.trace));
  write_file(config.output_dir, "metrics.json",
             metrics_json(r.metrics, qsim::decompose_circuit(r.program).qubit_count()));
  write_file(config.output_dir, "summary.txt", summary.str());
  return report;
}

mndas::IterationTrace cmd_trace(const ExperimentConfig& config, bool oracle) {
  const auto instance = config.instance();
  mndas::IterationTrace trace;
  if (oracle) {
    mndas::BoxAutomaton automaton(instance);
    const std::uint64_t full = mndas::full_box(instance.box_qubits());
    auto rows = automaton.rows();
    trace = rows;
    while (automaton.iteration() < instance.iterations()) {
      automaton.step();
      rows = automaton.rows();
      trace.insert(trace.end(), rows.begin(), rows.end());
      const auto full_count = std::count_if(rows.begin(), rows.end(), [&](const auto& r) { return r.box_value == full; });
      if (stop_now(config, static_cast<std::size_t>(full_count))) break;
    }
  } else {
    mndas::MndasRun run(instance);
    while (run.iteration() < instance.iterations()) {
      run.step();
      if (stop_now(config, run.full_paths().size())) break;
    }
    trace = run.trace();
  }
  write_file(config.output_dir, "trace.csv", trace_csv(trace));
  return trace;
}

QasmScope QasmScope::parse(std::string_view text) {
  if (text == "init") return {Kind::Init, 0};
  if (text == "full") return {Kind::Full, 0};
  if (text.rfind("iteration:", 0) == 0) {
    const auto digits = text.substr(10);
    std::uint64_t t = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || t == 0) {
      throw std::invalid_argument("iteration scope needs a positive integer, got '" + std::string(digits) + "'");
    }
    return {Kind::Iteration, t};
  }
  throw std::invalid_argument("scope must be init | iteration:<t> | full, got '" + std::string(text) + "'");
}

std::string cmd_qasm(const ExperimentConfig& config, QasmScope scope) {
  const auto instance = config.instance();
  const auto layout = mndas::RegisterLayout::for_instance(instance);
  qsim::Circuit circuit;
  switch (scope.kind) {
    case QasmScope::Kind::Init: circuit = mndas::init_fragment(layout); break;
    case QasmScope::Kind::Iteration: circuit = mndas::iteration_circuit(scope.iteration, instance, layout); break;
    case QasmScope::Kind::Full: circuit = mndas::run_mndas(instance).program; break;
  }
  const std::string text = qsim::to_qasm(circuit);
  write_file(config.output_dir, "circuit.qasm", text);
  return text;
}

aco::AcoResult cmd_classical(const ExperimentConfig& config) {
  const auto result = aco::run_simple_aco(config.weights, classical_params(config));
  std::ostringstream out;
  out << "path_id,weight,frequency,tau\n";
  for (std::size_t p = 0; p < config.weights.size(); ++p) {
    out << p << ',' << config.weights[p].to_string() << ',' << fmt(result.selection_frequency[p]) << ','
        << fmt(result.final_tau[p]) << '\n';
  }
  write_file(config.output_dir, "classical.csv", out.str());
  return result;
}

std::string order_text(std::size_t box_qubits) {
  std::ostringstream out;
  for (std::uint64_t v : mndas::box_order(box_qubits)) out << v << ',' << mndas::box_bits(v, box_qubits) << '\n';
  return out.str();
}

BenchReport cmd_bench(const ExperimentConfig& config, std::span<const std::size_t> n_list,
                      std::span<const std::uint64_t> k_list) {
  if (n_list.empty() || k_list.empty()) throw std::invalid_argument("bench needs nonempty n and K lists");
  std::vector<std::size_t> ns(n_list.begin(), n_list.end());
  std::vector<std::uint64_t> ks(k_list.begin(), k_list.end());
  std::sort(ns.begin(), ns.end());
  std::sort(ks.begin(), ks.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.size() < 2) throw std::invalid_argument("bench needs at least two distinct K values");

  BenchReport report;
  report.linear = true;
  for (std::size_t n : ns) {
    const std::vector<std::uint64_t> ones(n, 1);
    const auto instance = mndas::ProblemInstance::from_costs(ones, ks.back(), config.box_qubits, config.modes);
    std::vector<std::int64_t> totals;
    for (std::uint64_t k : ks) {
      const auto m = qsim::gate_metrics(qsim::decompose_circuit(mndas::build_program(instance, k)));
      report.rows.push_back({n, k, m.total_gates, m.depth});
      totals.push_back(static_cast<std::int64_t>(m.total_gates));
    }
    BenchFit fit;
    fit.n = n;
    const auto k0 = static_cast<std::int64_t>(ks[0]);
    const auto k1 = static_cast<std::int64_t>(ks[1]);
    fit.per_iteration = (totals[1] - totals[0]) / (k1 - k0);
    fit.constant = totals[0] - fit.per_iteration * k0;
    fit.exact = true;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (totals[i] != fit.per_iteration * static_cast<std::int64_t>(ks[i]) + fit.constant) fit.exact = false;
    }
    report.linear = report.linear && fit.exact;
    report.fits.push_back(fit);
  }
  report.monotone = true;
  for (std::size_t i = 1; i < report.fits.size(); ++i) {
    if (report.fits[i].per_iteration <= report.fits[i - 1].per_iteration) report.monotone = false;
  }

  std::ostringstream out;
  out << "n,K,total_gates,depth,per_iteration,constant,exact\n";
  for (const auto& row : report.rows) {
    const auto& fit = *std::find_if(report.fits.begin(), report.fits.end(), [&](const auto& f) { return f.n == row.n; });
    out << row.n << ',' << row.iterations << ',' << row.total_gates << ',' << row.depth << ',' << fit.per_iteration
        << ',' << fit.constant << ',' << (fit.exact ? 1 : 0) << '\n';
  }
  write_file(config.output_dir, "bench.csv", out.str());
  return report;
}

}  // namespace qaco::app
