#include "rebench/weights.hpp"

#include <cstdint>

namespace rebench {
namespace {

// C(h+m-1, m-1), saturating above `cap` so the inversion search can stop.
std::uint64_t lattice_count(int m, int h, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (int i = 1; i < m; ++i) {
    c = c * static_cast<std::uint64_t>(h + i) / static_cast<std::uint64_t>(i);
    if (c > cap) return cap + 1;
  }
  return c;
}

void lattice_rec(int m, int h, int depth, int rest, std::vector<int>& hs,
                 std::vector<WeightVector>& out) {
  if (depth == m - 1) {
    hs[static_cast<std::size_t>(depth)] = rest;
    Vec w(m);
    for (int i = 0; i < m; ++i)
      w[i] = static_cast<double>(hs[static_cast<std::size_t>(i)]) / static_cast<double>(h);
    out.push_back(WeightVector{std::move(w)});
    return;
  }
  for (int v = 0; v <= rest; ++v) {
    hs[static_cast<std::size_t>(depth)] = v;
    lattice_rec(m, h, depth + 1, rest - v, hs, out);
  }
}

}  // namespace

std::vector<WeightVector> simplex_lattice(int m, int h) {
  if (m < 2 || h < 1) throw ConfigError("simplex_lattice: need m >= 2 and h >= 1");
  std::vector<WeightVector> out;
  std::vector<int> hs(static_cast<std::size_t>(m), 0);
  lattice_rec(m, h, 0, h, hs, out);
  return out;
}

std::vector<WeightVector> two_layer(int m, int h_outer, int h_inner) {
  std::vector<WeightVector> out = simplex_lattice(m, h_outer);
  const Vec centroid = Vec::Constant(m, 1.0 / m);
  for (const WeightVector& w : simplex_lattice(m, h_inner)) {
    Vec inner = 0.5 * w.w + 0.5 * centroid;
    bool dup = false;
    for (const WeightVector& have : out)
      if ((have.w - inner).cwiseAbs().maxCoeff() <= 1e-12) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(WeightVector{std::move(inner)});
  }
  return out;
}

int population_size_for(int m, const std::string& algorithm) {
  switch (m) {
    case 2:
      return 100;
    case 3:
      return algorithm == "nsga2" ? 106 : 105;
    case 4:
      return 120;
    case 6:
      return 182;
    case 9:
      return 210;
    default:
      throw ConfigError("population_size_for: no size policy for M = " + std::to_string(m));
  }
}

std::vector<WeightVector> weight_set_for(int m, int mu) {
  if (m < 2 || mu < 2) throw ConfigError("weight_set_for: need m >= 2 and mu >= 2");
  const auto cap = static_cast<std::uint64_t>(mu);
  if (m <= 5) {
    for (int h = 1; lattice_count(m, h, cap) <= cap; ++h)
      if (lattice_count(m, h, cap) == cap) return simplex_lattice(m, h);
  } else {
    for (int ho = 1; lattice_count(m, ho, cap) <= cap; ++ho)
      for (int hi = 1; hi <= ho; ++hi) {
        if (lattice_count(m, ho, cap) + lattice_count(m, hi, cap) < cap) continue;
        std::vector<WeightVector> set = two_layer(m, ho, hi);
        if (set.size() == static_cast<std::size_t>(mu)) return set;
      }
  }
  throw ConfigError("weight_set_for: no lattice of size " + std::to_string(mu) +
                    " for M = " + std::to_string(m));
}

}  // namespace rebench
