#include "rebench/variation.hpp"

#include <algorithm>
#include <cmath>

namespace rebench {
namespace {

constexpr double kEps = 1.0e-14;

double spread(double rand, double alpha, double exponent) {
  if (rand <= 1.0 / alpha) return std::pow(rand * alpha, exponent);
  return std::pow(1.0 / (2.0 - rand * alpha), exponent);
}

}  // namespace

std::pair<Vec, Vec> sbx_crossover(const Vec& p1, const Vec& p2, const VariationConfig& cfg,
                                  const std::vector<VariableSpec>& bounds, Rng& rng) {
  if (p1.size() != p2.size()) throw std::invalid_argument("sbx_crossover: length mismatch");
  Vec c1 = p1;
  Vec c2 = p2;
  if (uniform_unit(rng) > cfg.p_c) return {std::move(c1), std::move(c2)};

  const double exponent = 1.0 / (cfg.eta_c + 1.0);
  for (Eigen::Index i = 0; i < p1.size(); ++i) {
    const double x1 = p1[i];
    const double x2 = p2[i];
    if (uniform_unit(rng) > 0.5) {
      c1[i] = x2;
      c2[i] = x1;
      continue;
    }
    if (std::abs(x1 - x2) <= kEps) {
      c1[i] = x1;
      c2[i] = x2;
      continue;
    }
    const double yl = bounds[static_cast<std::size_t>(i)].lower();
    const double yu = bounds[static_cast<std::size_t>(i)].upper();
    if (!(yu - yl > 0.0)) {
      c1[i] = x1;
      c2[i] = x2;
      continue;
    }
    const double y1 = std::min(x1, x2);
    const double y2 = std::max(x1, x2);
    const double rand = uniform_unit(rng);

    double beta = 1.0 + 2.0 * (y1 - yl) / (y2 - y1);
    double alpha = 2.0 - std::pow(beta, -(cfg.eta_c + 1.0));
    double lo = 0.5 * ((y1 + y2) - spread(rand, alpha, exponent) * (y2 - y1));

    beta = 1.0 + 2.0 * (yu - y2) / (y2 - y1);
    alpha = 2.0 - std::pow(beta, -(cfg.eta_c + 1.0));
    double hi = 0.5 * ((y1 + y2) + spread(rand, alpha, exponent) * (y2 - y1));

    lo = std::clamp(lo, yl, yu);
    hi = std::clamp(hi, yl, yu);
    if (uniform_unit(rng) <= 0.5) {
      c1[i] = hi;
      c2[i] = lo;
    } else {
      c1[i] = lo;
      c2[i] = hi;
    }
  }
  return {std::move(c1), std::move(c2)};
}

Vec polynomial_mutation(const Vec& x, const VariationConfig& cfg,
                        const std::vector<VariableSpec>& bounds, Rng& rng) {
  Vec y = x;
  const double mut_pow = 1.0 / (cfg.eta_m + 1.0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (uniform_unit(rng) > cfg.p_m) continue;
    const double yl = bounds[static_cast<std::size_t>(i)].lower();
    const double yu = bounds[static_cast<std::size_t>(i)].upper();
    if (!(yu - yl > 0.0)) continue;
    const double v = y[i];
    const double delta1 = (v - yl) / (yu - yl);
    const double delta2 = (yu - v) / (yu - yl);
    const double rnd = uniform_unit(rng);
    double deltaq;
    if (rnd <= 0.5) {
      const double xy = 1.0 - delta1;
      const double val = 2.0 * rnd + (1.0 - 2.0 * rnd) * std::pow(xy, cfg.eta_m + 1.0);
      deltaq = std::pow(val, mut_pow) - 1.0;
    } else {
      const double xy = 1.0 - delta2;
      const double val = 2.0 * (1.0 - rnd) + 2.0 * (rnd - 0.5) * std::pow(xy, cfg.eta_m + 1.0);
      deltaq = 1.0 - std::pow(val, mut_pow);
    }
    y[i] = std::clamp(v + deltaq * (yu - yl), yl, yu);
  }
  return y;
}

}  // namespace rebench
