#pragma once

#include "rebench/core.hpp"

#include <functional>
#include <optional>

namespace rebench {

struct AlgorithmConfig {
  std::string algorithm_id;   // nsga2 | moead_tch | moead_pbi | ibea | nsga3 | smsemoa
  int mu = 0;                 // 0: resolved by population_size_for
  int budget = 10000;
  int neighborhood_size = 20; // MOEA/D
  double theta = 5.0;         // PBI penalty
  double kappa = 0.05;        // IBEA scaling
  std::uint64_t seed = 0;
};

const std::vector<std::string>& algorithm_ids();

/// Weighted Chebyshev value max_i w_i |f_i - z_i|.
double scalarize_tch(const Vec& f, const WeightVector& w, const Vec& z_ideal);

/// Penalty boundary intersection d1 + theta * d2, with d1 the scalar
/// projection of f - z_ideal on w and d2 the perpendicular remainder.
double scalarize_pbi(const Vec& f, const WeightVector& w, const Vec& z_ideal, double theta);

/// Rank of each point after fast non-dominated sorting (0 = first front).
std::vector<int> front_ranks(const std::vector<Vec>& points);

/// One subproblem replacement decision inside MOEA/D.
struct MoeadOffer {
  int subproblem = 0;
  double child_value = 0.0;
  double incumbent_value = 0.0;
  bool replaced = false;
};

/// Observation taps for replay-based tests; any member may be empty.
struct RunHooks {
  std::function<void(const Solution&)> on_evaluate;
  std::function<void(const MoeadOffer&)> on_moead_offer;
};

/// Executes one optimization run. Consumes at most cfg.budget evaluations,
/// returns exactly mu final solutions plus the non-dominated archive of
/// everything evaluated; bit-deterministic for a fixed (problem, cfg, seed).
/// When bounds are given, RunRecord.hv is the hypervolume of the normalized
/// final population against (1.1, ..., 1.1); otherwise it is NaN.
RunRecord run(const std::string& problem_id, const AlgorithmConfig& cfg,
              const std::optional<NormalizationBounds>& bounds = std::nullopt,
              const RunHooks* hooks = nullptr);

/// Single-objective minimizer of one objective component (self-adaptive
/// differential evolution), used by bounds calibration. Returns the best
/// solution found; the callback sees every evaluation in order.
Solution minimize_single(const std::string& problem_id, int objective, int budget,
                         std::uint64_t seed,
                         const std::function<void(const Solution&)>& on_evaluate = {});

}  // namespace rebench
