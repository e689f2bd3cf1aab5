#pragma once

#include "rebench/core.hpp"

namespace rebench {

enum class Alternative { b_greater };

/// One-sided rank-sum p-value for "b stochastically greater than a".
/// Exact enumeration (over tied midranks) when min(|a|,|b|) < 20, normal
/// approximation with tie and continuity corrections otherwise.
double wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                         Alternative alt = Alternative::b_greater);

/// The two computation paths, exposed for cross-checking.
double wilcoxon_exact_p(const std::vector<double>& a, const std::vector<double>& b);
double wilcoxon_normal_p(const std::vector<double>& a, const std::vector<double>& b);

/// P(A_i) = number of algorithms whose sample is significantly greater than
/// A_i's at level alpha (larger values better).
std::vector<int> performance_scores(const std::vector<std::vector<double>>& samples,
                                    double alpha = 0.05);

/// Competition ranking ascending by score: rank = 1 + count of strictly
/// smaller scores, so (2,0,0) -> (3,1,1).
std::vector<int> rank_from_scores(const std::vector<int>& scores);

}  // namespace rebench
