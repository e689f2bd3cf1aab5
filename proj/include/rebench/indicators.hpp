#pragma once

#include "rebench/core.hpp"

namespace rebench {

struct ReferencePoint {
  Vec r;
  /// Protocol reference (1.1, ..., 1.1) in normalized objective space.
  static ReferencePoint protocol(int m) {
    ReferencePoint p;
    p.r = Vec::Constant(m, 1.1);
    return p;
  }
};

/// Componentwise affine map (f - ideal) / (nadir - ideal); not clamped.
Vec normalize(const Vec& f, const NormalizationBounds& b);

/// Points not dominated by any other input point, in stable input order;
/// duplicated objective vectors are all retained.
std::vector<Vec> nondominated_filter(const std::vector<Vec>& points);

/// Same filter, returning indices into the input (ascending).
std::vector<int> nondominated_indices(const std::vector<Vec>& points);

/// Exact hypervolume of the region dominated by `points` and bounded by
/// `ref`. Points that do not strictly dominate the reference are ignored.
/// Dedicated sweeps for two and three objectives, recursive slicing above.
double hypervolume(const std::vector<Vec>& points, const Vec& ref);
double hypervolume(const std::vector<Vec>& points, const ReferencePoint& ref);

/// Per-point exclusive hypervolume: HV(S) - HV(S minus the point). Zero for
/// dominated points, duplicates, and points outside the reference box.
std::vector<double> hv_contributions(const std::vector<Vec>& points, const Vec& ref);

/// max_i (a_i - b_i): the smallest shift of `a` that weakly dominates `b`.
double additive_epsilon(const Vec& a, const Vec& b);

/// Distance-based archive thinning: keep the per-objective extremes, then
/// greedily add the point with maximal minimum Euclidean distance to the
/// selected set, measured after min-max normalization by the archive's own
/// ranges. Returns at most k points in stable input order.
std::vector<Vec> subset_select(const std::vector<Vec>& points, int k);
std::vector<int> subset_select_indices(const std::vector<Vec>& points, int k);

}  // namespace rebench
