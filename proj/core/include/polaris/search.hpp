#pragma once

#include <cstdint>
#include <utility>

#include "polaris/multipole.hpp"

namespace polaris {

struct SearchConfig {
  HalfInt S;
  int M = 1;
  int multistarts = 64;
  int max_iters = 2000;
  double tol_value = 1e-12;
  double tol_grad = 1e-10;
  std::uint64_t rng_seed = 0;
};

struct SearchResult {
  SpinState best_state;
  double best_value = 0.0;
  int certified_order = 0;      // unpolarization_order of best_state at 1e-8
  int starts_converged = 0;
  long iterations_total = 0;
  std::uint64_t seed = 0;
};

/// Objective A_M of the state with amplitudes Psi_k = params[2k] + i params[2k+1],
/// normalized inside; analytic gradient with respect to the raw parameters.
std::pair<double, Eigen::VectorXd> objective_and_gradient(const Eigen::VectorXd& params, HalfInt S,
                                                          int M);

/// Multistart quasi-Newton descent; deterministic for a fixed config. Starts
/// are seeded independently from (rng_seed, start index), so the outcome does
/// not depend on evaluation order.
SearchResult minimize(const SearchConfig& cfg);

/// Largest M with minimize(cfg with that M).best_value < eps, scanning upward
/// from M = 1 and stopping at the first failure; 0 when even M = 1 fails.
int max_killable_order(HalfInt S, const SearchConfig& base_cfg, double eps = 1e-8);

}  // namespace polaris
