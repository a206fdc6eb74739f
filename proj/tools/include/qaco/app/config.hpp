#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qaco/aco/classical.hpp"
#include "qaco/mndas/instance.hpp"

namespace qaco::app {

/// Error in a config file. `line()` is 1-based; 0 means the problem is not
/// tied to one line (for example a missing required key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ExperimentConfig {
  std::vector<mndas::PathWeight> weights;
  std::uint64_t iterations = 0;
  std::size_t box_qubits = 4;
  mndas::EngineModes modes;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 1;  // shot sampling and the classical run
  aco::AcoParams classical;
  std::filesystem::path output_dir = "qaco_out";

  std::size_t n() const noexcept { return weights.size(); }
  mndas::ProblemInstance instance() const;
};

/// Line-oriented `key = value` text with `#` comments. Required keys: n,
/// weights, iterations. Weights are comma separated integers or `inf`.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// `verbatim`, `none` or `period:<E>`.
mndas::EvaporationPolicy parse_policy(std::string_view text);

}  // namespace qaco::app
