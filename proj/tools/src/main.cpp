#include <iostream>

#include <CLI11.hpp>

#include "qaco/app/commands.hpp"

namespace {

using namespace qaco::app;

struct Options {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  bool oracle = false;
  std::string scope = "full";
  std::size_t order_d = 4;
  std::vector<std::size_t> n_list{4, 8, 16};
  std::vector<std::uint64_t> k_list{1, 2, 4, 8};
};

ExperimentConfig load(const Options& opt) {
  ExperimentConfig cfg = load_config(opt.config_path);
  if (!opt.out_dir.empty()) cfg.output_dir = opt.out_dir;
  if (opt.seed) cfg.seed = *opt.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum ant colony path search on a statevector simulator"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_dir, "Output directory (overrides output_dir)");
    sub->add_option("--seed", opt.seed, "Seed (overrides seed)");
  };

  auto* run = app.add_subcommand("run", "Run the engine and write histogram, trace, metrics and summary");
  add_common(run);
  auto* trace = app.add_subcommand("trace", "Write the pheromone-box trace only");
  add_common(trace);
  trace->add_flag("--oracle", opt.oracle, "Recompute the trace with the classical box automaton");
  auto* qasm = app.add_subcommand("qasm", "Export OpenQASM 2.0");
  add_common(qasm);
  qasm->add_option("--scope", opt.scope, "init | iteration:<t> | full")->capture_default_str();
  auto* classical = app.add_subcommand("classical", "Run the classical ant colony reference");
  add_common(classical);
  auto* order = app.add_subcommand("order", "Print the deposition order of a d-qubit box");
  order->add_option("d", opt.order_d, "Box qubits")->capture_default_str()->check(CLI::Range(2, 62));
  auto* bench = app.add_subcommand("bench", "Gate counts over n and K");
  add_common(bench);
  bench->add_option("--n-list", opt.n_list, "Path counts")->capture_default_str();
  bench->add_option("--k-list", opt.k_list, "Iteration counts")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (order->parsed()) {
      std::cout << order_text(opt.order_d);
      return kExitOk;
    }
    const ExperimentConfig cfg = load(opt);
    if (run->parsed()) {
      std::cout << cmd_run(cfg).summary << '\n';
    } else if (trace->parsed()) {
      const auto rows = cmd_trace(cfg, opt.oracle);
      std::cout << "wrote " << rows.size() << " trace rows to " << (cfg.output_dir / "trace.csv").string() << '\n';
    } else if (qasm->parsed()) {
      cmd_qasm(cfg, QasmScope::parse(opt.scope));
      std::cout << "wrote " << (cfg.output_dir / "circuit.qasm").string() << '\n';
    } else if (classical->parsed()) {
      const auto r = cmd_classical(cfg);
      std::cout << "best path " << r.best_path << " (weight " << r.best_weight << ", final frequency "
                << r.selection_frequency[r.best_path] << ")\n";
    } else if (bench->parsed()) {
      const auto r = cmd_bench(cfg, opt.n_list, opt.k_list);
      for (const auto& f : r.fits) {
        std::cout << "n=" << f.n << " total = " << f.per_iteration << "*K + " << f.constant
                  << (f.exact ? "" : " (not exact)") << '\n';
      }
      std::cout << "linear in K: " << (r.linear ? "yes" : "no") << "; per-iteration count increasing in n: "
                << (r.monotone ? "yes" : "no") << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
