#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qaco/mndas/instance.hpp"

namespace qaco::aco {

using mndas::PathWeight;

/// Simple ant-system parameters for the parallel-path problem.
struct AcoParams {
  double alpha = 1.0;   // pheromone exponent
  double beta = 2.0;    // heuristic exponent
  double rho = 0.1;     // evaporation factor in (0, 1]
  double r0 = 0.5;      // exploitation threshold in [0, 1]
  double q_deposit = 1.0;
  std::size_t ants_per_iteration = 100;
  std::size_t iterations = 200;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// tau[j] and eta[j] = 1 / W[j] per path. Infinite-weight paths carry eta 0
/// and are never feasible.
struct PheromoneVector {
  std::vector<double> tau;
  std::vector<double> eta;

  static PheromoneVector initial(std::span<const PathWeight> weights, double tau0 = 1.0);
};

struct AcoResult {
  std::size_t best_path = 0;
  std::uint64_t best_weight = 0;
  /// Fraction of the final iteration's ants on each path.
  std::vector<double> selection_frequency;
  std::vector<double> final_tau;
};

/// All pheromone numerators vanished on the feasible set.
class DegeneratePheromone : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p_j = tau_j^alpha * eta_j^beta / sum over feasible; zero outside `feasible`.
std::vector<double> transition_probabilities(const PheromoneVector& pheromone, const AcoParams& params,
                                             std::span<const std::size_t> feasible);

/// Exploit (argmax, lowest id on ties) when r <= r0, otherwise draw from
/// transition_probabilities() with `u` in [0, 1).
std::size_t pseudo_random_select(const PheromoneVector& pheromone, const AcoParams& params,
                                 std::span<const std::size_t> feasible, double r, double u);

/// tau[path] += q_deposit / weight.
void deposit(PheromoneVector& pheromone, std::size_t path_id, std::uint64_t weight, double q_deposit);

/// tau <- (1 - rho) tau on every path.
void evaporate(PheromoneVector& pheromone, double rho);

/// Lowest-id minimum among finite weights.
std::size_t brute_force_argmin(std::span<const PathWeight> weights);

/// Each iteration: every ant picks a path, all trails evaporate, then each
/// ant deposits on its path. Reproducible for a fixed seed.
AcoResult run_simple_aco(std::span<const PathWeight> weights, const AcoParams& params);

}  // namespace qaco::aco
