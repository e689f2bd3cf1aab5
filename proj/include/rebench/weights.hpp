#pragma once

#include "rebench/core.hpp"

namespace rebench {

/// All vectors (h_1/H, ..., h_M/H) with non-negative integer h_i summing to
/// H, in lexicographic order. Count is C(H+M-1, M-1).
std::vector<WeightVector> simplex_lattice(int m, int h);

/// Outer lattice plus an inner lattice shrunk toward the centroid,
/// w <- 0.5 w + 0.5/M, with duplicates removed.
std::vector<WeightVector> two_layer(int m, int h_outer, int h_inner);

/// Population size policy per objective count (100/105/120/182/210 for
/// M = 2/3/4/6/9); nsga2 gets 106 at M = 3 to stay even. Unsupported M
/// raises ConfigError.
int population_size_for(int m, const std::string& algorithm);

/// Weight set of cardinality exactly mu: single lattice for M <= 5,
/// two-layer for M >= 6, with the resolution inverted from mu. ConfigError
/// when no construction matches.
std::vector<WeightVector> weight_set_for(int m, int mu);

}  // namespace rebench
