#include "rebench/algorithms.hpp"

#include "rebench/indicators.hpp"
#include "rebench/problems.hpp"
#include "rebench/variation.hpp"
#include "rebench/weights.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rebench {
namespace {

constexpr double kHuge = 1e100;

// Selection-side view of an objective vector: every comparison, sort and
// scalarization inside the algorithms sees finite values. The true vector
// (possibly infinite at domain edges) stays in the Solution.
Vec sane(const Vec& f) {
  Vec s = f;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (std::isnan(s[i]))
      s[i] = kHuge;
    else
      s[i] = std::clamp(s[i], -kHuge, kHuge);
  }
  return s;
}

// ------------------------------------------------------------- evaluation

class Evaluator {
 public:
  Evaluator(const std::string& id, int budget, const RunHooks* hooks)
      : reg_(registry()), desc_(reg_.descriptor(id)), budget_(budget), hooks_(hooks) {
    ideal_ = Vec::Constant(desc_.m_objectives, std::numeric_limits<double>::infinity());
  }

  const ProblemDescriptor& desc() const { return desc_; }
  bool exhausted() const { return used_ >= budget_; }
  int used() const { return used_; }
  const std::vector<Solution>& log() const { return log_; }

  // Running componentwise minimum over every fully finite evaluation.
  const Vec& running_ideal() const { return ideal_; }

  Solution eval(const Vec& x) {
    if (exhausted()) throw std::logic_error("evaluation budget exceeded");
    Solution s;
    s.x = repair(x, desc_.variables);
    if (desc_.n_constraints > 0) {
      auto [f, g] = reg_.evaluate_constrained(desc_.id, s.x);
      s.f = std::move(f);
      s.g_violations = std::move(g);
    } else {
      s.f = reg_.evaluate(desc_.id, s.x);
    }
    ++used_;
    if (all_finite(s.f)) ideal_ = ideal_.cwiseMin(s.f);
    log_.push_back(s);
    if (hooks_ && hooks_->on_evaluate) hooks_->on_evaluate(s);
    return s;
  }

  std::vector<Solution> make_archive() const {
    std::vector<Vec> fs;
    fs.reserve(log_.size());
    for (const Solution& s : log_) fs.push_back(s.f);
    std::vector<Solution> archive;
    for (int i : nondominated_indices(fs)) archive.push_back(log_[static_cast<std::size_t>(i)]);
    return archive;
  }

 private:
  const ProblemRegistry& reg_;
  const ProblemDescriptor& desc_;
  int budget_;
  int used_ = 0;
  const RunHooks* hooks_;
  std::vector<Solution> log_;
  Vec ideal_;
};

// ------------------------------------------------------ sorting utilities

struct Fronts {
  std::vector<int> rank;
  std::vector<std::vector<int>> fronts;
};

Fronts fast_nondominated_sort(const std::vector<Vec>& pts) {
  const std::size_t n = pts.size();
  Fronts out;
  out.rank.assign(n, 0);
  std::vector<int> dom_count(n, 0);
  std::vector<std::vector<int>> dominated(n);
  std::vector<int> current;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (dominates(pts[p], pts[q])) {
        dominated[p].push_back(static_cast<int>(q));
        ++dom_count[q];
      } else if (dominates(pts[q], pts[p])) {
        dominated[q].push_back(static_cast<int>(p));
        ++dom_count[p];
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    if (dom_count[p] == 0) current.push_back(static_cast<int>(p));
  int level = 0;
  while (!current.empty()) {
    out.fronts.push_back(current);
    std::vector<int> next;
    for (int p : current) {
      out.rank[static_cast<std::size_t>(p)] = level;
      for (int q : dominated[static_cast<std::size_t>(p)])
        if (--dom_count[static_cast<std::size_t>(q)] == 0) next.push_back(q);
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
    ++level;
  }
  return out;
}

// Crowding distance of one front, indexed like `front`.
std::vector<double> crowding_of(const std::vector<Vec>& pts, const std::vector<int>& front) {
  const std::size_t k = front.size();
  std::vector<double> cd(k, 0.0);
  if (k == 0) return cd;
  const Eigen::Index m = pts[static_cast<std::size_t>(front[0])].size();
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  for (Eigen::Index d = 0; d < m; ++d) {
    std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) {
      return pts[static_cast<std::size_t>(front[static_cast<std::size_t>(a)])][d] <
             pts[static_cast<std::size_t>(front[static_cast<std::size_t>(b)])][d];
    });
    const double lo = pts[static_cast<std::size_t>(front[static_cast<std::size_t>(pos.front())])][d];
    const double hi = pts[static_cast<std::size_t>(front[static_cast<std::size_t>(pos.back())])][d];
    cd[static_cast<std::size_t>(pos.front())] = std::numeric_limits<double>::infinity();
    cd[static_cast<std::size_t>(pos.back())] = std::numeric_limits<double>::infinity();
    if (!(hi - lo > 0.0)) continue;
    for (std::size_t i = 1; i + 1 < k; ++i) {
      const double below = pts[static_cast<std::size_t>(front[static_cast<std::size_t>(pos[i - 1])])][d];
      const double above = pts[static_cast<std::size_t>(front[static_cast<std::size_t>(pos[i + 1])])][d];
      cd[static_cast<std::size_t>(pos[i])] += (above - below) / (hi - lo);
    }
  }
  return cd;
}

// --------------------------------------------------------- shared run state

struct RunState {
  Evaluator ev;
  Rng rng;
  VariationConfig vcfg;
  int mu;

  RunState(const std::string& id, const AlgorithmConfig& cfg, const RunHooks* hooks)
      : ev(id, cfg.budget, hooks), rng(cfg.seed), mu(cfg.mu) {
    vcfg.p_c = 1.0;
    vcfg.eta_c = 20.0;
    vcfg.p_m = 1.0 / static_cast<double>(ev.desc().n_variables);
    vcfg.eta_m = 20.0;
  }

  std::vector<Solution> init_population() {
    std::vector<Solution> pop;
    pop.reserve(static_cast<std::size_t>(mu));
    for (int i = 0; i < mu && !ev.exhausted(); ++i)
      pop.push_back(ev.eval(random_solution(ev.desc().variables, rng)));
    return pop;
  }

  // SBX + mutation on both children; evaluation is the caller's business.
  std::pair<Vec, Vec> make_children(const Vec& p1, const Vec& p2) {
    auto [c1, c2] = sbx_crossover(p1, p2, vcfg, ev.desc().variables, rng);
    c1 = polynomial_mutation(c1, vcfg, ev.desc().variables, rng);
    c2 = polynomial_mutation(c2, vcfg, ev.desc().variables, rng);
    return {std::move(c1), std::move(c2)};
  }
};

std::vector<Vec> sane_view(const std::vector<Solution>& pop) {
  std::vector<Vec> v;
  v.reserve(pop.size());
  for (const Solution& s : pop) v.push_back(sane(s.f));
  return v;
}

// ------------------------------------------------------------------ NSGA-II

std::vector<Solution> nsga2_loop(RunState& st) {
  std::vector<Solution> pop = st.init_population();
  while (!st.ev.exhausted()) {
    std::vector<Vec> pf = sane_view(pop);
    Fronts fr = fast_nondominated_sort(pf);
    std::vector<double> cd(pop.size(), 0.0);
    for (const std::vector<int>& front : fr.fronts) {
      std::vector<double> fcd = crowding_of(pf, front);
      for (std::size_t i = 0; i < front.size(); ++i)
        cd[static_cast<std::size_t>(front[i])] = fcd[i];
    }
    auto better = [&](int a, int b) {
      if (fr.rank[static_cast<std::size_t>(a)] != fr.rank[static_cast<std::size_t>(b)])
        return fr.rank[static_cast<std::size_t>(a)] < fr.rank[static_cast<std::size_t>(b)] ? a : b;
      if (cd[static_cast<std::size_t>(a)] != cd[static_cast<std::size_t>(b)])
        return cd[static_cast<std::size_t>(a)] > cd[static_cast<std::size_t>(b)] ? a : b;
      return a;  // first drawn wins
    };
    auto tournament = [&]() {
      const int a = static_cast<int>(uniform_index(st.rng, pop.size()));
      const int b = static_cast<int>(uniform_index(st.rng, pop.size()));
      return better(a, b);
    };

    std::vector<Solution> off;
    while (static_cast<int>(off.size()) < st.mu && !st.ev.exhausted()) {
      const int p1 = tournament();
      const int p2 = tournament();
      auto [c1, c2] = st.make_children(pop[static_cast<std::size_t>(p1)].x,
                                       pop[static_cast<std::size_t>(p2)].x);
      off.push_back(st.ev.eval(c1));
      if (static_cast<int>(off.size()) < st.mu && !st.ev.exhausted()) off.push_back(st.ev.eval(c2));
    }
    if (off.empty()) break;

    std::vector<Solution> uni = std::move(pop);
    uni.insert(uni.end(), std::make_move_iterator(off.begin()), std::make_move_iterator(off.end()));
    std::vector<Vec> uf = sane_view(uni);
    Fronts ufr = fast_nondominated_sort(uf);
    pop.clear();
    std::vector<int> take;
    for (const std::vector<int>& front : ufr.fronts) {
      if (static_cast<int>(take.size()) + static_cast<int>(front.size()) <= st.mu) {
        take.insert(take.end(), front.begin(), front.end());
      } else {
        std::vector<double> fcd = crowding_of(uf, front);
        std::vector<int> pos(front.size());
        std::iota(pos.begin(), pos.end(), 0);
        std::stable_sort(pos.begin(), pos.end(),
                         [&](int a, int b) { return fcd[static_cast<std::size_t>(a)] > fcd[static_cast<std::size_t>(b)]; });
        for (int p : pos) {
          if (static_cast<int>(take.size()) >= st.mu) break;
          take.push_back(front[static_cast<std::size_t>(p)]);
        }
        break;
      }
      if (static_cast<int>(take.size()) == st.mu) break;
    }
    for (int i : take) pop.push_back(std::move(uni[static_cast<std::size_t>(i)]));
  }
  return pop;
}

// ------------------------------------------------------------------ MOEA/D

std::vector<Solution> moead_loop(RunState& st, const AlgorithmConfig& cfg, bool pbi,
                                 const RunHooks* hooks) {
  const int m = st.ev.desc().m_objectives;
  const std::vector<WeightVector> ws = weight_set_for(m, st.mu);
  const int t = cfg.neighborhood_size;

  // Neighborhoods: the T nearest weight vectors (self included), distance
  // ties broken by index.
  std::vector<std::vector<int>> nb(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::vector<int> order(ws.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> d(ws.size());
    for (std::size_t j = 0; j < ws.size(); ++j) d[j] = (ws[i].w - ws[j].w).squaredNorm();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (d[static_cast<std::size_t>(a)] != d[static_cast<std::size_t>(b)])
        return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)];
      return a < b;
    });
    nb[i].assign(order.begin(), order.begin() + t);
  }

  std::vector<Solution> pop = st.init_population();
  const Vec zero = Vec::Zero(m);

  auto guarded_ideal = [&]() {
    Vec z = st.ev.running_ideal();
    for (Eigen::Index i = 0; i < z.size(); ++i)
      if (!std::isfinite(z[i])) z[i] = 0.0;
    return z;
  };

  while (!st.ev.exhausted()) {
    // Sweep-start normalization state: running ideal plus population nadir.
    const Vec z = guarded_ideal();
    Vec nadir = sane(pop[0].f);
    for (const Solution& s : pop) nadir = nadir.cwiseMax(sane(s.f));
    const Vec denom = (nadir - z).cwiseMax(1e-12);

    auto scalarized = [&](const Vec& f, const WeightVector& w) {
      const Vec fn = (sane(f) - guarded_ideal()).cwiseQuotient(denom);
      return pbi ? scalarize_pbi(fn, w, zero, cfg.theta) : scalarize_tch(fn, w, zero);
    };

    for (int i = 0; i < st.mu && !st.ev.exhausted(); ++i) {
      const auto& b = nb[static_cast<std::size_t>(i)];
      const int k = b[uniform_index(st.rng, b.size())];
      int l = b[uniform_index(st.rng, b.size())];
      while (l == k && b.size() > 1) l = b[uniform_index(st.rng, b.size())];
      auto [c1, c2] = st.make_children(pop[static_cast<std::size_t>(k)].x,
                                       pop[static_cast<std::size_t>(l)].x);
      (void)c2;
      Solution child = st.ev.eval(c1);
      for (int j : b) {
        const double g_child = scalarized(child.f, ws[static_cast<std::size_t>(j)]);
        const double g_inc = scalarized(pop[static_cast<std::size_t>(j)].f, ws[static_cast<std::size_t>(j)]);
        const bool replace = g_child <= g_inc;
        if (hooks && hooks->on_moead_offer)
          hooks->on_moead_offer(MoeadOffer{j, g_child, g_inc, replace});
        if (replace) pop[static_cast<std::size_t>(j)] = child;
      }
    }
  }
  return pop;
}

// -------------------------------------------------------------------- IBEA

struct IbeaState {
  std::vector<std::vector<double>> ind;  // I(y, x) on scaled objectives
  std::vector<double> fit;
  double c = 1.0;
  double kappa = 0.05;
};

IbeaState ibea_fitness(const std::vector<Vec>& pf, double kappa) {
  const std::size_t n = pf.size();
  const Eigen::Index m = pf[0].size();
  Vec lo = pf[0], hi = pf[0];
  for (const Vec& f : pf) {
    lo = lo.cwiseMin(f);
    hi = hi.cwiseMax(f);
  }
  Vec width = (hi - lo).cwiseMax(0.0);
  for (Eigen::Index d = 0; d < m; ++d)
    if (!(width[d] > 0.0)) width[d] = 1.0;
  std::vector<Vec> scaled;
  scaled.reserve(n);
  for (const Vec& f : pf) scaled.push_back((f - lo).cwiseQuotient(width));

  IbeaState st;
  st.kappa = kappa;
  st.ind.assign(n, std::vector<double>(n, 0.0));
  double c = 0.0;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      const double v = additive_epsilon(scaled[y], scaled[x]);
      st.ind[y][x] = v;
      c = std::max(c, std::abs(v));
    }
  st.c = c > 0.0 ? c : 1.0;
  st.fit.assign(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    double f = 0.0;
    for (std::size_t y = 0; y < n; ++y)
      if (y != x) f -= std::exp(-st.ind[y][x] / (st.kappa * st.c));
    st.fit[x] = f;
  }
  return st;
}

std::vector<Solution> ibea_loop(RunState& st, const AlgorithmConfig& cfg) {
  std::vector<Solution> pop = st.init_population();
  IbeaState fitness = ibea_fitness(sane_view(pop), cfg.kappa);

  while (!st.ev.exhausted()) {
    auto tournament = [&]() {
      const int a = static_cast<int>(uniform_index(st.rng, pop.size()));
      const int b = static_cast<int>(uniform_index(st.rng, pop.size()));
      if (fitness.fit[static_cast<std::size_t>(a)] != fitness.fit[static_cast<std::size_t>(b)])
        return fitness.fit[static_cast<std::size_t>(a)] > fitness.fit[static_cast<std::size_t>(b)] ? a : b;
      return a;
    };
    std::vector<Solution> off;
    while (static_cast<int>(off.size()) < st.mu && !st.ev.exhausted()) {
      const int p1 = tournament();
      const int p2 = tournament();
      auto [c1, c2] = st.make_children(pop[static_cast<std::size_t>(p1)].x,
                                       pop[static_cast<std::size_t>(p2)].x);
      off.push_back(st.ev.eval(c1));
      if (static_cast<int>(off.size()) < st.mu && !st.ev.exhausted()) off.push_back(st.ev.eval(c2));
    }
    if (off.empty()) break;

    std::vector<Solution> uni = std::move(pop);
    uni.insert(uni.end(), std::make_move_iterator(off.begin()), std::make_move_iterator(off.end()));
    fitness = ibea_fitness(sane_view(uni), cfg.kappa);

    std::vector<char> alive(uni.size(), 1);
    std::size_t remaining = uni.size();
    while (remaining > static_cast<std::size_t>(st.mu)) {
      int worst = -1;
      for (std::size_t i = 0; i < uni.size(); ++i) {
        if (!alive[i]) continue;
        if (worst < 0 || fitness.fit[i] < fitness.fit[static_cast<std::size_t>(worst)])
          worst = static_cast<int>(i);
      }
      alive[static_cast<std::size_t>(worst)] = 0;
      --remaining;
      for (std::size_t x = 0; x < uni.size(); ++x) {
        if (!alive[x]) continue;
        fitness.fit[x] +=
            std::exp(-fitness.ind[static_cast<std::size_t>(worst)][x] / (fitness.kappa * fitness.c));
      }
    }
    // Survivors keep their updated fitness for the next mating round; the
    // indicator matrix is rebuilt from scratch next generation.
    std::vector<Solution> next;
    std::vector<double> next_fit;
    for (std::size_t i = 0; i < uni.size(); ++i) {
      if (!alive[i]) continue;
      next.push_back(std::move(uni[i]));
      next_fit.push_back(fitness.fit[i]);
    }
    pop = std::move(next);
    fitness.fit = std::move(next_fit);
    fitness.ind.clear();
  }
  return pop;
}

// ------------------------------------------------------------------ NSGA-III

std::vector<Solution> nsga3_loop(RunState& st) {
  const int m = st.ev.desc().m_objectives;
  const std::vector<WeightVector> refs = weight_set_for(m, st.mu);
  std::vector<Solution> pop = st.init_population();

  while (!st.ev.exhausted()) {
    std::vector<Solution> off;
    while (static_cast<int>(off.size()) < st.mu && !st.ev.exhausted()) {
      const int p1 = static_cast<int>(uniform_index(st.rng, pop.size()));
      const int p2 = static_cast<int>(uniform_index(st.rng, pop.size()));
      auto [c1, c2] = st.make_children(pop[static_cast<std::size_t>(p1)].x,
                                       pop[static_cast<std::size_t>(p2)].x);
      off.push_back(st.ev.eval(c1));
      if (static_cast<int>(off.size()) < st.mu && !st.ev.exhausted()) off.push_back(st.ev.eval(c2));
    }
    if (off.empty()) break;

    std::vector<Solution> uni = std::move(pop);
    uni.insert(uni.end(), std::make_move_iterator(off.begin()), std::make_move_iterator(off.end()));
    std::vector<Vec> uf = sane_view(uni);
    Fronts fr = fast_nondominated_sort(uf);

    // S_t: whole fronts until mu is reached or passed.
    std::vector<int> chosen;           // members of fronts fully taken
    std::vector<int> partial;          // the front that overflows
    for (const std::vector<int>& front : fr.fronts) {
      if (static_cast<int>(chosen.size()) + static_cast<int>(front.size()) <= st.mu) {
        chosen.insert(chosen.end(), front.begin(), front.end());
        if (static_cast<int>(chosen.size()) == st.mu) break;
      } else {
        partial = front;
        break;
      }
    }

    if (partial.empty()) {
      pop.clear();
      for (int i : chosen) pop.push_back(std::move(uni[static_cast<std::size_t>(i)]));
      continue;
    }

    // Normalization over S_t = chosen + partial.
    std::vector<int> all_st = chosen;
    all_st.insert(all_st.end(), partial.begin(), partial.end());
    Vec z = st.ev.running_ideal();
    for (Eigen::Index i = 0; i < z.size(); ++i)
      if (!std::isfinite(z[i])) z[i] = 0.0;

    // Extreme points by axis achievement scalarizing function.
    Eigen::MatrixXd extremes(m, m);
    for (int j = 0; j < m; ++j) {
      double best = std::numeric_limits<double>::infinity();
      int best_i = all_st[0];
      for (int i : all_st) {
        double asf = 0.0;
        for (Eigen::Index d = 0; d < m; ++d) {
          const double w = d == j ? 1.0 : 1e-6;
          asf = std::max(asf, (uf[static_cast<std::size_t>(i)][d] - z[d]) / w);
        }
        if (asf < best) {
          best = asf;
          best_i = i;
        }
      }
      extremes.row(j) = (uf[static_cast<std::size_t>(best_i)] - z).transpose();
    }

    Vec intercepts(m);
    bool plane_ok = false;
    {
      Eigen::FullPivLU<Eigen::MatrixXd> lu(extremes);
      if (lu.isInvertible()) {
        Vec a = lu.solve(Vec::Ones(m));
        plane_ok = true;
        for (int d = 0; d < m; ++d) {
          if (!(a[d] > 0.0) || !std::isfinite(a[d])) {
            plane_ok = false;
            break;
          }
          intercepts[d] = 1.0 / a[d];
        }
      }
    }
    if (!plane_ok) {
      intercepts = Vec::Zero(m);
      for (int i : all_st)
        intercepts = intercepts.cwiseMax(uf[static_cast<std::size_t>(i)] - z);
    }
    for (int d = 0; d < m; ++d) intercepts[d] = std::max(intercepts[d], 1e-12);

    // Associate each S_t member with its closest reference line.
    std::vector<int> assoc(uni.size(), -1);
    std::vector<double> adist(uni.size(), 0.0);
    for (int i : all_st) {
      const Vec fn = (uf[static_cast<std::size_t>(i)] - z).cwiseQuotient(intercepts);
      double best = std::numeric_limits<double>::infinity();
      int best_r = 0;
      for (std::size_t r = 0; r < refs.size(); ++r) {
        const Vec& w = refs[r].w;
        const double t = fn.dot(w) / w.squaredNorm();
        const double d2 = (fn - t * w).squaredNorm();
        if (d2 < best) {
          best = d2;
          best_r = static_cast<int>(r);
        }
      }
      assoc[static_cast<std::size_t>(i)] = best_r;
      adist[static_cast<std::size_t>(i)] = std::sqrt(best);
    }

    std::vector<int> rho(refs.size(), 0);
    for (int i : chosen) ++rho[static_cast<std::size_t>(assoc[static_cast<std::size_t>(i)])];

    std::vector<std::vector<int>> pool(refs.size());
    for (int i : partial) pool[static_cast<std::size_t>(assoc[static_cast<std::size_t>(i)])].push_back(i);

    std::vector<char> active(refs.size(), 1);
    const int need = st.mu - static_cast<int>(chosen.size());
    for (int picked = 0; picked < need;) {
      int rho_min = std::numeric_limits<int>::max();
      for (std::size_t r = 0; r < refs.size(); ++r)
        if (active[r]) rho_min = std::min(rho_min, rho[r]);
      std::vector<int> tied;
      for (std::size_t r = 0; r < refs.size(); ++r)
        if (active[r] && rho[r] == rho_min) tied.push_back(static_cast<int>(r));
      const int rbar = tied[uniform_index(st.rng, tied.size())];
      std::vector<int>& cands = pool[static_cast<std::size_t>(rbar)];
      if (cands.empty()) {
        active[static_cast<std::size_t>(rbar)] = 0;
        continue;
      }
      std::size_t pick;
      if (rho[static_cast<std::size_t>(rbar)] == 0) {
        pick = 0;
        for (std::size_t c = 1; c < cands.size(); ++c)
          if (adist[static_cast<std::size_t>(cands[c])] < adist[static_cast<std::size_t>(cands[pick])]) pick = c;
      } else {
        pick = uniform_index(st.rng, cands.size());
      }
      chosen.push_back(cands[pick]);
      cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(pick));
      ++rho[static_cast<std::size_t>(rbar)];
      ++picked;
    }

    pop.clear();
    for (int i : chosen) pop.push_back(std::move(uni[static_cast<std::size_t>(i)]));
  }
  return pop;
}

// ---------------------------------------------------------------- SMS-EMOA

std::vector<Solution> smsemoa_loop(RunState& st) {
  std::vector<Solution> pop = st.init_population();
  while (!st.ev.exhausted()) {
    const int p1 = static_cast<int>(uniform_index(st.rng, pop.size()));
    int p2 = static_cast<int>(uniform_index(st.rng, pop.size()));
    while (p2 == p1 && pop.size() > 1) p2 = static_cast<int>(uniform_index(st.rng, pop.size()));
    auto [c1, c2] = st.make_children(pop[static_cast<std::size_t>(p1)].x,
                                     pop[static_cast<std::size_t>(p2)].x);
    (void)c2;
    pop.push_back(st.ev.eval(c1));

    std::vector<Vec> pf = sane_view(pop);
    Fronts fr = fast_nondominated_sort(pf);
    const std::vector<int>& worst = fr.fronts.back();
    int remove;
    if (worst.size() == 1) {
      remove = worst[0];
    } else {
      const Eigen::Index m = pf[0].size();
      Vec lo = pf[static_cast<std::size_t>(worst[0])], hi = lo;
      for (int i : worst) {
        lo = lo.cwiseMin(pf[static_cast<std::size_t>(i)]);
        hi = hi.cwiseMax(pf[static_cast<std::size_t>(i)]);
      }
      Vec width = hi - lo;
      for (Eigen::Index d = 0; d < m; ++d)
        if (!(width[d] > 0.0)) width[d] = 1.0;
      std::vector<Vec> norm;
      norm.reserve(worst.size());
      for (int i : worst) norm.push_back((pf[static_cast<std::size_t>(i)] - lo).cwiseQuotient(width));
      const Vec ref = Vec::Constant(m, 2.0);
      std::vector<double> contrib = hv_contributions(norm, ref);
      std::size_t arg = 0;
      for (std::size_t i = 1; i < contrib.size(); ++i)
        if (contrib[i] < contrib[arg]) arg = i;
      remove = worst[arg];
    }
    pop.erase(pop.begin() + remove);
  }
  return pop;
}

}  // namespace

// ------------------------------------------------------------- public API

const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids = {"nsga2",  "moead_tch", "moead_pbi",
                                               "ibea",   "nsga3",     "smsemoa"};
  return ids;
}

double scalarize_tch(const Vec& f, const WeightVector& w, const Vec& z_ideal) {
  double g = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    g = std::max(g, w.w[i] * std::abs(f[i] - z_ideal[i]));
  return g;
}

double scalarize_pbi(const Vec& f, const WeightVector& w, const Vec& z_ideal, double theta) {
  const double wn = w.w.norm();
  if (!(wn > 0.0)) throw std::invalid_argument("scalarize_pbi: zero weight vector");
  const Vec diff = f - z_ideal;
  const double d1 = std::abs(diff.dot(w.w)) / wn;
  const double d2 = (diff - d1 * w.w / wn).norm();
  return d1 + theta * d2;
}

std::vector<int> front_ranks(const std::vector<Vec>& points) {
  return fast_nondominated_sort(points).rank;
}

RunRecord run(const std::string& problem_id, const AlgorithmConfig& cfg,
              const std::optional<NormalizationBounds>& bounds, const RunHooks* hooks) {
  const auto& alg_ids = algorithm_ids();
  if (std::find(alg_ids.begin(), alg_ids.end(), cfg.algorithm_id) == alg_ids.end())
    throw ConfigError("unknown algorithm: " + cfg.algorithm_id);
  const ProblemDescriptor& desc = registry().descriptor(problem_id);

  AlgorithmConfig c = cfg;
  if (c.mu == 0) c.mu = population_size_for(desc.m_objectives, c.algorithm_id);
  if (c.budget < c.mu)
    throw ConfigError("budget " + std::to_string(c.budget) + " below population size " +
                      std::to_string(c.mu));
  if (c.algorithm_id == "smsemoa" && desc.m_objectives > 3)
    throw ConfigError("smsemoa supports at most 3 objectives, " + problem_id + " has " +
                      std::to_string(desc.m_objectives));
  if ((c.algorithm_id == "moead_tch" || c.algorithm_id == "moead_pbi") &&
      c.neighborhood_size > c.mu)
    throw ConfigError("neighborhood size exceeds population size");
  if (c.theta <= 0.0) throw ConfigError("theta must be positive");

  RunState st(problem_id, c, hooks);
  std::vector<Solution> final_pop;
  if (c.algorithm_id == "nsga2")
    final_pop = nsga2_loop(st);
  else if (c.algorithm_id == "moead_tch")
    final_pop = moead_loop(st, c, false, hooks);
  else if (c.algorithm_id == "moead_pbi")
    final_pop = moead_loop(st, c, true, hooks);
  else if (c.algorithm_id == "ibea")
    final_pop = ibea_loop(st, c);
  else if (c.algorithm_id == "nsga3")
    final_pop = nsga3_loop(st);
  else
    final_pop = smsemoa_loop(st);

  RunRecord rec;
  rec.problem_id = problem_id;
  rec.algorithm_id = c.algorithm_id;
  rec.seed = c.seed;
  rec.evaluations_used = st.ev.used();
  rec.final_population.members = std::move(final_pop);
  rec.final_population.capacity = c.mu;
  rec.nondominated_archive = st.ev.make_archive();
  if (bounds) {
    std::vector<Vec> nf;
    nf.reserve(rec.final_population.members.size());
    for (const Solution& s : rec.final_population.members) nf.push_back(normalize(s.f, *bounds));
    rec.hv = hypervolume(nf, ReferencePoint::protocol(desc.m_objectives));
  } else {
    rec.hv = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

Solution minimize_single(const std::string& problem_id, int objective, int budget,
                         std::uint64_t seed,
                         const std::function<void(const Solution&)>& on_evaluate) {
  const ProblemDescriptor& desc = registry().descriptor(problem_id);
  if (objective < 0 || objective >= desc.m_objectives)
    throw ConfigError("minimize_single: objective index out of range");
  RunHooks hooks;
  hooks.on_evaluate = on_evaluate;
  Evaluator ev(problem_id, budget, on_evaluate ? &hooks : nullptr);
  Rng rng(seed);
  const auto& specs = desc.variables;
  const auto d = static_cast<std::size_t>(desc.n_variables);

  auto value = [&](const Solution& s) { return sane(s.f)[objective]; };

  const int np = std::max(4, std::min(50, budget));
  std::vector<Solution> pop;
  std::vector<double> fparam(static_cast<std::size_t>(np), 0.5);
  std::vector<double> crparam(static_cast<std::size_t>(np), 0.9);
  for (int i = 0; i < np && !ev.exhausted(); ++i)
    pop.push_back(ev.eval(random_solution(specs, rng)));

  Solution best = pop[0];
  for (const Solution& s : pop)
    if (value(s) < value(best)) best = s;
  if (pop.size() < 4) return best;

  while (!ev.exhausted()) {
    for (std::size_t i = 0; i < pop.size() && !ev.exhausted(); ++i) {
      const double f_trial =
          uniform_unit(rng) < 0.1 ? 0.1 + 0.9 * uniform_unit(rng) : fparam[i];
      const double cr_trial = uniform_unit(rng) < 0.1 ? uniform_unit(rng) : crparam[i];
      std::size_t r1 = uniform_index(rng, pop.size());
      while (r1 == i) r1 = uniform_index(rng, pop.size());
      std::size_t r2 = uniform_index(rng, pop.size());
      while (r2 == i || r2 == r1) r2 = uniform_index(rng, pop.size());
      std::size_t r3 = uniform_index(rng, pop.size());
      while (r3 == i || r3 == r1 || r3 == r2) r3 = uniform_index(rng, pop.size());

      Vec trial = pop[i].x;
      const std::size_t jrand = uniform_index(rng, d);
      for (std::size_t j = 0; j < d; ++j) {
        if (uniform_unit(rng) < cr_trial || j == jrand) {
          double v = pop[r1].x[static_cast<Eigen::Index>(j)] +
                     f_trial * (pop[r2].x[static_cast<Eigen::Index>(j)] -
                                pop[r3].x[static_cast<Eigen::Index>(j)]);
          v = std::clamp(v, specs[j].lower(), specs[j].upper());
          trial[static_cast<Eigen::Index>(j)] = v;
        }
      }
      Solution ts = ev.eval(trial);
      if (value(ts) <= value(pop[i])) {
        pop[i] = ts;
        fparam[i] = f_trial;
        crparam[i] = cr_trial;
        if (value(ts) < value(best)) best = ts;
      }
    }
  }
  return best;
}

}  // namespace rebench
