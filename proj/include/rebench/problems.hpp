#pragma once

#include "rebench/core.hpp"

#include <utility>

namespace rebench {

/// Registry of the 16 RE and 8 CRE engineering-design problems.
///
/// Evaluation is pure and rejects decision vectors that violate their
/// VariableSpec (out of bounds, non-integral, or off the discrete grid);
/// callers repair first. CRE problems additionally expose their raw
/// constraint-violation vector through evaluate_constrained().
class ProblemRegistry {
 public:
  ProblemRegistry();

  const std::vector<std::string>& ids() const;
  bool contains(const std::string& id) const;

  /// Throws std::out_of_range for unknown ids.
  const ProblemDescriptor& descriptor(const std::string& id) const;

  /// Objective vector of length M. Throws std::domain_error for invalid x.
  Vec evaluate(const std::string& id, const Vec& x) const;

  /// (objectives, per-constraint violations >= 0); CRE ids only.
  std::pair<Vec, Vec> evaluate_constrained(const std::string& id, const Vec& x) const;

  /// JSON catalog of every descriptor, in registry order.
  std::string catalog_json() const;

  struct Impl;

 private:
  const Impl* impl_;
};

const ProblemRegistry& registry();

/// Sum of violations of constraints stated in g >= 0 form.
double aggregate_violation(const Vec& g);

/// Clip to bounds; round integer variables to the nearest integer and map
/// discrete variables to the nearest set member, ties toward the lower value.
Vec repair(const Vec& x, const std::vector<VariableSpec>& specs);

/// Uniform draw over the bounds of each variable, then repaired.
Vec random_solution(const std::vector<VariableSpec>& specs, Rng& rng);

}  // namespace rebench
