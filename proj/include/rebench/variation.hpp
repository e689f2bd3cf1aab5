#pragma once

#include "rebench/core.hpp"

#include <utility>

namespace rebench {

struct VariationConfig {
  double p_c = 1.0;
  double eta_c = 20.0;
  double p_m = 0.0;  // callers set 1/D
  double eta_m = 20.0;
};

/// Bounded SBX with a per-variable 0.5 exchange decision and boundary-aware
/// spread factors; one spread draw is shared by both children of a variable.
/// Operates on the continuous relaxation of the bounds; grid variables are
/// snapped later by repair.
std::pair<Vec, Vec> sbx_crossover(const Vec& p1, const Vec& p2, const VariationConfig& cfg,
                                  const std::vector<VariableSpec>& bounds, Rng& rng);

/// Polynomial mutation, each variable independently with probability p_m.
Vec polynomial_mutation(const Vec& x, const VariationConfig& cfg,
                        const std::vector<VariableSpec>& bounds, Rng& rng);

}  // namespace rebench
