#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace rebench {

using Vec = Eigen::VectorXd;
using Rng = std::mt19937_64;

// Invalid experiment or algorithm configuration (wrong objective count,
// unsupported population size, malformed config file).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ----------------------------------------------------------------- variables

enum class VarKind { continuous, integer, discrete };

struct VariableSpec {
  VarKind kind = VarKind::continuous;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> values;  // discrete only, strictly ascending

  static VariableSpec cont(double lo, double hi);
  static VariableSpec integer(double lo, double hi);
  static VariableSpec discrete(std::vector<double> values);

  double lower() const { return kind == VarKind::discrete ? values.front() : lo; }
  double upper() const { return kind == VarKind::discrete ? values.back() : hi; }
  bool valid_value(double v) const;
};

inline VariableSpec VariableSpec::cont(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("variable bounds: lo < hi required");
  VariableSpec s;
  s.kind = VarKind::continuous;
  s.lo = lo;
  s.hi = hi;
  return s;
}

inline VariableSpec VariableSpec::integer(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("variable bounds: lo < hi required");
  VariableSpec s;
  s.kind = VarKind::integer;
  s.lo = lo;
  s.hi = hi;
  return s;
}

inline VariableSpec VariableSpec::discrete(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("discrete set empty");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i - 1] < values[i]))
      throw std::invalid_argument("discrete set must be strictly ascending");
  VariableSpec s;
  s.kind = VarKind::discrete;
  s.values = std::move(values);
  s.lo = s.values.front();
  s.hi = s.values.back();
  return s;
}

inline bool VariableSpec::valid_value(double v) const {
  switch (kind) {
    case VarKind::continuous:
      return v >= lo && v <= hi;
    case VarKind::integer:
      return v >= lo && v <= hi && v == std::floor(v);
    case VarKind::discrete:
      for (double w : values)
        if (w == v) return true;
      return false;
  }
  return false;
}

// ----------------------------------------------------------------- problems

enum class FrontShape { convex, mixed, mixed_disconnected, concave_disconnected, unknown };

struct ProblemDescriptor {
  std::string id;
  int m_objectives = 0;
  int n_variables = 0;
  std::vector<VariableSpec> variables;
  int n_constraints = 0;
  FrontShape front_shape = FrontShape::unknown;
};

// ----------------------------------------------------------------- solutions

struct Solution {
  Vec x;
  Vec f;
  std::optional<Vec> g_violations;  // CRE only, entries >= 0
};

struct Population {
  std::vector<Solution> members;
  int capacity = 0;
};

struct NormalizationBounds {
  Vec z_ideal;
  Vec z_nadir;
};

// Bounds with each nadir entry forced strictly above the ideal; a collapsed
// entry is widened by a relative margin so normalization stays finite.
inline NormalizationBounds make_bounds(Vec ideal, Vec nadir) {
  for (Eigen::Index i = 0; i < ideal.size(); ++i)
    if (!(nadir[i] > ideal[i]))
      nadir[i] = ideal[i] + 1e-6 * std::max(1.0, std::abs(ideal[i]));
  return NormalizationBounds{std::move(ideal), std::move(nadir)};
}

struct WeightVector {
  Vec w;
};

struct RunRecord {
  std::string problem_id;
  std::string algorithm_id;
  std::uint64_t seed = 0;
  int evaluations_used = 0;
  Population final_population;
  std::vector<Solution> nondominated_archive;
  double hv = 0.0;
};

// ----------------------------------------------------------------- dominance

// Minimization Pareto dominance: a <= b everywhere and < somewhere.
inline bool dominates(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: length mismatch");
  bool strict = false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

inline bool all_finite(const Vec& f) {
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (!std::isfinite(f[i])) return false;
  return true;
}

inline bool solution_valid(const Vec& x, const std::vector<VariableSpec>& specs) {
  if (static_cast<std::size_t>(x.size()) != specs.size()) return false;
  for (std::size_t i = 0; i < specs.size(); ++i)
    if (!specs[i].valid_value(x[static_cast<Eigen::Index>(i)])) return false;
  return true;
}

// Deterministic uniform helpers. The standard distributions are
// implementation-defined, so raw 53-bit draws are used instead.
inline double uniform_real(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace rebench
