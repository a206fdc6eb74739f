#include "qaco/aco/classical.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace qaco::aco {

namespace {

double attractiveness(const PheromoneVector& p, const AcoParams& params, std::size_t j) {
  return std::pow(p.tau[j], params.alpha) * std::pow(p.eta[j], params.beta);
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

void AcoParams::validate() const {
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in (0, 1]");
  if (!(r0 >= 0.0 && r0 <= 1.0)) throw std::invalid_argument("r0 must lie in [0, 1]");
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw std::invalid_argument("alpha and beta must be >= 0");
  if (!(q_deposit >= 0.0)) throw std::invalid_argument("q_deposit must be >= 0");
  if (ants_per_iteration == 0) throw std::invalid_argument("ants per iteration must be >= 1");
  if (iterations == 0) throw std::invalid_argument("iterations must be >= 1");
}

PheromoneVector PheromoneVector::initial(std::span<const PathWeight> weights, double tau0) {
  PheromoneVector p;
  p.tau.assign(weights.size(), tau0);
  p.eta.resize(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    p.eta[j] = weights[j].is_finite() ? 1.0 / static_cast<double>(weights[j].value()) : 0.0;
  }
  return p;
}

std::vector<double> transition_probabilities(const PheromoneVector& pheromone, const AcoParams& params,
                                             std::span<const std::size_t> feasible) {
  if (feasible.empty()) throw std::invalid_argument("feasible set is empty");
  std::vector<double> probs(pheromone.tau.size(), 0.0);
  double total = 0.0;
  for (std::size_t j : feasible) {
    probs.at(j) = attractiveness(pheromone, params, j);
    total += probs[j];
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw DegeneratePheromone("pheromone numerators sum to " + std::to_string(total));
  }
  for (std::size_t j : feasible) probs[j] /= total;
  return probs;
}

std::size_t pseudo_random_select(const PheromoneVector& pheromone, const AcoParams& params,
                                 std::span<const std::size_t> feasible, double r, double u) {
  if (feasible.empty()) throw std::invalid_argument("feasible set is empty");
  if (r <= params.r0) {
    std::size_t best = feasible.front();
    double best_value = -1.0;
    for (std::size_t j : feasible) {
      const double v = attractiveness(pheromone, params, j);
      if (v > best_value || (v == best_value && j < best)) {
        best = j;
        best_value = v;
      }
    }
    if (!(best_value > 0.0)) throw DegeneratePheromone("no feasible path has positive attractiveness");
    return best;
  }
  const auto probs = transition_probabilities(pheromone, params, feasible);
  double running = 0.0;
  for (std::size_t j : feasible) {
    running += probs[j];
    if (u < running) return j;
  }
  // Rounding left u just above the final partial sum.
  for (auto it = feasible.rbegin(); it != feasible.rend(); ++it) {
    if (probs[*it] > 0.0) return *it;
  }
  return feasible.back();
}

void deposit(PheromoneVector& pheromone, std::size_t path_id, std::uint64_t weight, double q_deposit) {
  if (weight == 0) throw std::invalid_argument("deposit needs a finite positive weight");
  pheromone.tau.at(path_id) += q_deposit / static_cast<double>(weight);
}

void evaporate(PheromoneVector& pheromone, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in (0, 1]");
  for (double& t : pheromone.tau) t *= (1.0 - rho);
}

std::size_t brute_force_argmin(std::span<const PathWeight> weights) {
  std::size_t best = weights.size();
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!weights[j].is_finite()) continue;
    if (best == weights.size() || weights[j].value() < weights[best].value()) best = j;
  }
  if (best == weights.size()) throw std::invalid_argument("every path weight is infinite");
  return best;
}

AcoResult run_simple_aco(std::span<const PathWeight> weights, const AcoParams& params) {
  params.validate();
  std::vector<std::size_t> feasible;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j].is_finite()) feasible.push_back(j);
  }
  if (feasible.empty()) throw std::invalid_argument("every path weight is infinite");

  PheromoneVector pheromone = PheromoneVector::initial(weights);
  std::mt19937_64 rng(params.seed);
  std::vector<std::size_t> choices(params.ants_per_iteration);

  for (std::size_t it = 0; it < params.iterations; ++it) {
    for (auto& choice : choices) {
      const double r = unit_uniform(rng);
      const double u = unit_uniform(rng);
      choice = pseudo_random_select(pheromone, params, feasible, r, u);
    }
    evaporate(pheromone, params.rho);
    for (std::size_t choice : choices) deposit(pheromone, choice, weights[choice].value(), params.q_deposit);
  }

  AcoResult result;
  result.selection_frequency.assign(weights.size(), 0.0);
  for (std::size_t choice : choices) result.selection_frequency[choice] += 1.0;
  for (double& f : result.selection_frequency) f /= static_cast<double>(choices.size());
  result.best_path = static_cast<std::size_t>(
      std::max_element(result.selection_frequency.begin(), result.selection_frequency.end()) -
      result.selection_frequency.begin());
  result.best_weight = weights[result.best_path].value();
  result.final_tau = pheromone.tau;
  return result;
}

}  // namespace qaco::aco
