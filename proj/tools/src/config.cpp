#include "qaco/app/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace qaco::app {

using mndas::EvaporationPolicy;
using mndas::PathWeight;

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

mndas::ProblemInstance ExperimentConfig::instance() const {
  return mndas::ProblemInstance(weights, iterations, box_qubits, modes);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected a number, got '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t parse_positive(std::string_view s) {
  const auto v = parse_uint(s);
  if (v == 0) throw std::invalid_argument("must be at least 1");
  return v;
}

std::vector<PathWeight> parse_weights(std::string_view s) {
  std::vector<PathWeight> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (item == "inf") {
      out.push_back(PathWeight::infinite());
    } else {
      out.emplace_back(parse_positive(item));
    }
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <typename Enum>
Enum parse_enum(std::string_view s, std::initializer_list<std::pair<std::string_view, Enum>> options) {
  std::string expected;
  for (const auto& [name, value] : options) {
    if (s == name) return value;
    expected += expected.empty() ? std::string(name) : " | " + std::string(name);
  }
  throw std::invalid_argument("expected " + expected + ", got '" + std::string(s) + "'");
}

double in_range(double v, double lo, double hi, bool lo_open) {
  if (v > hi || v < lo || (lo_open && v == lo)) {
    throw std::invalid_argument("out of range " + std::string(lo_open ? "(" : "[") + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  return v;
}

}  // namespace

EvaporationPolicy parse_policy(std::string_view text) {
  if (text == "verbatim") return EvaporationPolicy::verbatim();
  if (text == "none") return EvaporationPolicy::none();
  if (text.rfind("period:", 0) == 0) return EvaporationPolicy::every(parse_positive(text.substr(7)));
  throw std::invalid_argument("expected verbatim | period:<E> | none, got '" + std::string(text) + "'");
}

ExperimentConfig parse_config(std::string_view text) {
  using mndas::GuardMode;
  using mndas::MarkingMode;
  using mndas::StopRule;

  ExperimentConfig cfg;
  std::optional<std::uint64_t> declared_n;
  std::size_t weights_line = 0;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  const std::map<std::string, std::function<void(std::string_view)>, std::less<>> handlers{
      {"n", [&](auto v) { declared_n = parse_positive(v); }},
      {"weights", [&](auto v) { cfg.weights = parse_weights(v); }},
      {"iterations", [&](auto v) { cfg.iterations = parse_positive(v); }},
      {"box_qubits",
       [&](auto v) {
         cfg.box_qubits = parse_uint(v);
         if (cfg.box_qubits < 2) throw std::invalid_argument("box_qubits must be at least 2");
       }},
      {"evaporation_policy", [&](auto v) { cfg.modes.evaporation = parse_policy(v); }},
      {"guard_mode",
       [&](auto v) {
         cfg.modes.guard = parse_enum<GuardMode>(v, {{"verbatim", GuardMode::Verbatim}, {"corrected", GuardMode::Corrected}});
       }},
      {"marking_mode",
       [&](auto v) {
         cfg.modes.marking =
             parse_enum<MarkingMode>(v, {{"verbatim_msb", MarkingMode::VerbatimMsb}, {"flag_z", MarkingMode::FlagZ}});
       }},
      {"stop_rule",
       [&](auto v) {
         cfg.modes.stop = parse_enum<StopRule>(v, {{"fixed_k", StopRule::FixedK}, {"first_full", StopRule::FirstFull}});
       }},
      {"grover_iterations", [&](auto v) { cfg.modes.grover_iterations = parse_uint(v); }},
      {"shots", [&](auto v) { cfg.shots = parse_positive(v); }},
      {"seed", [&](auto v) { cfg.seed = parse_uint(v); }},
      {"alpha", [&](auto v) { cfg.classical.alpha = in_range(parse_double(v), 0.0, kInf, false); }},
      {"beta", [&](auto v) { cfg.classical.beta = in_range(parse_double(v), 0.0, kInf, false); }},
      {"rho", [&](auto v) { cfg.classical.rho = in_range(parse_double(v), 0.0, 1.0, true); }},
      {"r0", [&](auto v) { cfg.classical.r0 = in_range(parse_double(v), 0.0, 1.0, false); }},
      {"q_deposit", [&](auto v) { cfg.classical.q_deposit = in_range(parse_double(v), 0.0, kInf, true); }},
      {"ants", [&](auto v) { cfg.classical.ants_per_iteration = parse_positive(v); }},
      {"aco_iterations", [&](auto v) { cfg.classical.iterations = parse_positive(v); }},
      {"output_dir", [&](auto v) { cfg.output_dir = std::string(v); }},
  };

  std::set<std::string, std::less<>> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto handler = handlers.find(key);
    if (handler == handlers.end()) throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    if (!seen.emplace(key).second) throw ConfigError(line_no, "duplicate key '" + std::string(key) + "'");
    if (value.empty()) throw ConfigError(line_no, std::string(key) + ": missing value");
    try {
      handler->second(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line_no, std::string(key) + ": " + e.what());
    }
    if (key == "weights") weights_line = line_no;
  }

  for (const char* required : {"n", "weights", "iterations"}) {
    if (!seen.contains(required)) throw ConfigError(0, std::string("missing required key '") + required + "'");
  }
  if (cfg.weights.size() != *declared_n) {
    throw ConfigError(weights_line, "weights has " + std::to_string(cfg.weights.size()) + " entries but n = " +
                                        std::to_string(*declared_n));
  }
  if (cfg.weights.size() < 2) throw ConfigError(weights_line, "at least two paths are required");
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace qaco::app
