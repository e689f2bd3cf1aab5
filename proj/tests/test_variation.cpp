#include "rebench/variation.hpp"

#include <doctest.h>

#include <cmath>

using namespace rebench;

namespace {

std::vector<VariableSpec> unit_bounds(int d) {
  std::vector<VariableSpec> out;
  for (int i = 0; i < d; ++i) out.push_back(VariableSpec::cont(0, 1));
  return out;
}

Vec random_parent(Rng& rng, int d) {
  Vec p(d);
  for (int i = 0; i < d; ++i) p[i] = uniform_unit(rng);
  return p;
}

}  // namespace

TEST_CASE("crossover of identical parents is the identity") {
  VariationConfig cfg;
  auto bounds = unit_bounds(5);
  Rng rng(3);
  Vec p = random_parent(rng, 5);
  for (int t = 0; t < 100; ++t) {
    auto [c1, c2] = sbx_crossover(p, p, cfg, bounds, rng);
    CHECK((c1 - p).cwiseAbs().maxCoeff() == 0.0);
    CHECK((c2 - p).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("crossover children stay inside the box") {
  VariationConfig cfg;
  auto bounds = unit_bounds(4);
  Rng rng(5);
  for (int t = 0; t < 100000; ++t) {
    Vec p1 = random_parent(rng, 4);
    Vec p2 = random_parent(rng, 4);
    auto [c1, c2] = sbx_crossover(p1, p2, cfg, bounds, rng);
    CHECK(c1.minCoeff() >= 0.0);
    CHECK(c1.maxCoeff() <= 1.0);
    CHECK(c2.minCoeff() >= 0.0);
    CHECK(c2.maxCoeff() <= 1.0);
  }
}

TEST_CASE("large distribution index collapses crossover onto the parents") {
  VariationConfig cfg;
  cfg.eta_c = 1e6;
  auto bounds = unit_bounds(3);
  Rng rng(7);
  for (int t = 0; t < 2000; ++t) {
    Vec p1 = random_parent(rng, 3);
    Vec p2 = random_parent(rng, 3);
    auto [c1, c2] = sbx_crossover(p1, p2, cfg, bounds, rng);
    for (int j = 0; j < 3; ++j) {
      const double lo = std::min(p1[j], p2[j]);
      const double hi = std::max(p1[j], p2[j]);
      const double clo = std::min(c1[j], c2[j]);
      const double chi = std::max(c1[j], c2[j]);
      CHECK(std::abs(clo - lo) < 1e-3);
      CHECK(std::abs(chi - hi) < 1e-3);
    }
  }
}

TEST_CASE("disabled crossover copies the parents") {
  VariationConfig cfg;
  cfg.p_c = 0.0;
  auto bounds = unit_bounds(3);
  Rng rng(9);
  Vec p1 = random_parent(rng, 3);
  Vec p2 = random_parent(rng, 3);
  auto [c1, c2] = sbx_crossover(p1, p2, cfg, bounds, rng);
  CHECK((c1 - p1).cwiseAbs().maxCoeff() == 0.0);
  CHECK((c2 - p2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("child sums stay centered on the parent sum") {
  VariationConfig cfg;
  auto bounds = unit_bounds(1);
  Rng rng(11);
  Vec p1(1), p2(1);
  p1 << 0.3;
  p2 << 0.7;
  double mean = 0.0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    auto [c1, c2] = sbx_crossover(p1, p2, cfg, bounds, rng);
    mean += 0.5 * (c1[0] + c2[0]);
  }
  mean /= trials;
  CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("mutation respects probability gate and bounds") {
  auto bounds = unit_bounds(6);
  Rng rng(13);
  Vec x = random_parent(rng, 6);

  VariationConfig off;
  off.p_m = 0.0;
  Vec y = polynomial_mutation(x, off, bounds, rng);
  CHECK((y - x).cwiseAbs().maxCoeff() == 0.0);

  VariationConfig on;
  on.p_m = 1.0;
  for (int t = 0; t < 20000; ++t) {
    Vec z = polynomial_mutation(x, on, bounds, rng);
    CHECK(z.minCoeff() >= 0.0);
    CHECK(z.maxCoeff() <= 1.0);
  }
}

TEST_CASE("large mutation index collapses onto the input") {
  auto bounds = unit_bounds(3);
  VariationConfig cfg;
  cfg.p_m = 1.0;
  cfg.eta_m = 1e6;
  Rng rng(15);
  for (int t = 0; t < 2000; ++t) {
    Vec x = random_parent(rng, 3);
    Vec y = polynomial_mutation(x, cfg, bounds, rng);
    CHECK((y - x).cwiseAbs().maxCoeff() < 1e-3);
  }
}

TEST_CASE("variation is deterministic per seed") {
  VariationConfig cfg;
  cfg.p_m = 0.5;
  auto bounds = unit_bounds(4);
  Rng ra(99), rb(99), rc(100);
  Vec p1(4), p2(4);
  p1 << 0.1, 0.7, 0.4, 0.9;
  p2 << 0.6, 0.2, 0.8, 0.3;
  auto [a1, a2] = sbx_crossover(p1, p2, cfg, bounds, ra);
  auto [b1, b2] = sbx_crossover(p1, p2, cfg, bounds, rb);
  CHECK((a1 - b1).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a2 - b2).cwiseAbs().maxCoeff() == 0.0);
  auto [c1, c2] = sbx_crossover(p1, p2, cfg, bounds, rc);
  CHECK(((c1 - a1).cwiseAbs().maxCoeff() > 0.0 || (c2 - a2).cwiseAbs().maxCoeff() > 0.0));
}

TEST_CASE("crossover rejects mismatched parents") {
  VariationConfig cfg;
  Rng rng(1);
  CHECK_THROWS_AS(sbx_crossover(Vec::Zero(2), Vec::Zero(3), cfg, unit_bounds(3), rng),
                  std::invalid_argument);
}
