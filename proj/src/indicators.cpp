#include "rebench/indicators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace rebench {
namespace {

bool strictly_inside(const Vec& p, const Vec& ref) {
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (!(p[i] < ref[i])) return false;
  return true;
}

// Volume of the box [p, ref].
double inclusive_volume(const Vec& p, const Vec& ref) {
  double v = 1.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) v *= ref[i] - p[i];
  return v;
}

// --------------------------------------------------------------- 2-D sweep

// Points must strictly dominate ref. Duplicates and dominated points are
// handled by the sweep itself.
double hv2d(std::vector<Vec> pts, const Vec& ref) {
  if (pts.empty()) return 0.0;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  double area = 0.0;
  double y_prev = ref[1];
  for (const Vec& p : pts) {
    if (p[1] < y_prev) {
      area += (ref[0] - p[0]) * (y_prev - p[1]);
      y_prev = p[1];
    }
  }
  return area;
}

// --------------------------------------------------------- 3-D z-sweep

// Staircase of 2-D points (f1 -> f2), mutually non-dominated, f2 strictly
// decreasing as f1 increases. add_point returns the newly covered area
// against the (ref1, ref2) corner.
class Staircase2D {
 public:
  Staircase2D(double ref1, double ref2) : ref1_(ref1), ref2_(ref2) {}

  double add_point(double a, double b) {
    auto succ = steps_.lower_bound(a);
    if (succ != steps_.begin()) {
      auto pred = std::prev(succ);
      if (pred->second <= b) return 0.0;  // weakly dominated, nothing new
    }
    double delta = 0.0;
    double x = a;
    double ylow = succ == steps_.begin() ? ref2_ : std::prev(succ)->second;
    auto it = succ;
    while (it != steps_.end() && it->second >= b) {
      delta += (it->first - x) * (ylow - b);
      ylow = it->second;
      x = it->first;
      it = steps_.erase(it);
    }
    const double xend = it != steps_.end() ? it->first : ref1_;
    delta += (xend - x) * (ylow - b);
    steps_.emplace(a, b);
    return delta;
  }

 private:
  double ref1_, ref2_;
  std::map<double, double> steps_;
};

double hv3d(std::vector<Vec> pts, const Vec& ref) {
  if (pts.empty()) return 0.0;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  Staircase2D stairs(ref[0], ref[1]);
  double volume = 0.0;
  double area = 0.0;
  double z_prev = pts.front()[2];
  for (const Vec& p : pts) {
    volume += area * (p[2] - z_prev);
    z_prev = p[2];
    area += stairs.add_point(p[0], p[1]);
  }
  volume += area * (ref[2] - z_prev);
  return volume;
}

// ------------------------------------------------------ recursive slicing

// Componentwise max: the part of q's box that lies inside p's box.
Vec limit_point(const Vec& p, const Vec& q) {
  Vec r(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) r[i] = std::max(p[i], q[i]);
  return r;
}

std::vector<Vec> filter_nd(const std::vector<Vec>& pts);

double hv_dispatch(std::vector<Vec> pts, const Vec& ref);

// Exact duplicates add no volume but multiply the slicing recursion badly:
// converged populations repeat objective vectors, and limit_point collapses
// clustered points into further copies at every level.
std::vector<Vec> dedup_exact(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec& a, const Vec& b) { return a == b; }),
            pts.end());
  return pts;
}

double hv_sliced(std::vector<Vec> pts, const Vec& ref) {
  const std::size_t n = pts.size();
  if (n == 0) return 0.0;
  if (n == 1) return inclusive_volume(pts[0], ref);
  if (n == 2)
    return inclusive_volume(pts[0], ref) + inclusive_volume(pts[1], ref) -
           inclusive_volume(limit_point(pts[0], pts[1]), ref);
  const Eigen::Index last = pts.front().size() - 1;
  std::sort(pts.begin(), pts.end(),
            [last](const Vec& a, const Vec& b) { return a[last] < b[last]; });
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> limits;
    limits.reserve(n - i - 1);
    for (std::size_t j = i + 1; j < n; ++j) limits.push_back(limit_point(pts[i], pts[j]));
    total += inclusive_volume(pts[i], ref) -
             hv_dispatch(filter_nd(dedup_exact(std::move(limits))), ref);
  }
  return total;
}

double hv_dispatch(std::vector<Vec> pts, const Vec& ref) {
  if (pts.empty()) return 0.0;
  switch (pts.front().size()) {
    case 2:
      return hv2d(std::move(pts), ref);
    case 3:
      return hv3d(std::move(pts), ref);
    default:
      return hv_sliced(std::move(pts), ref);
  }
}

// ------------------------------------------------------ dominance filtering

std::vector<char> nd_flags(const std::vector<Vec>& pts) {
  const std::size_t n = pts.size();
  std::vector<char> keep(n, 0);
  if (n == 0) return keep;
  const Eigen::Index m = pts.front().size();

  if (m == 2) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
      if (pts[a][1] != pts[b][1]) return pts[a][1] < pts[b][1];
      return a < b;
    });
    double best_prev = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (i < n) {
      const double x0 = pts[order[i]][0];
      std::size_t j = i;
      while (j < n && pts[order[j]][0] == x0) ++j;
      const double group_min = pts[order[i]][1];
      if (group_min < best_prev) {
        for (std::size_t k = i; k < j && pts[order[k]][1] == group_min; ++k)
          keep[static_cast<std::size_t>(order[k])] = 1;
        best_prev = group_min;
      }
      i = j;
    }
    return keep;
  }

  // Scale-invariant sum ordering: any dominator of a point sorts strictly
  // before it, so only accepted points need to be scanned.
  Vec lo = pts.front(), hi = pts.front();
  for (const Vec& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  Vec width = hi - lo;
  std::vector<double> key(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (Eigen::Index d = 0; d < m; ++d)
      if (width[d] > 0.0) key[i] += (pts[i][d] - lo[d]) / width[d];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (key[static_cast<std::size_t>(a)] != key[static_cast<std::size_t>(b)])
      return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
    return a < b;
  });
  // Accepted points live in one contiguous row-major block so the scan
  // streams memory instead of chasing per-vector allocations.
  std::vector<double> acc;
  acc.reserve(n * static_cast<std::size_t>(m));
  std::vector<double> cand(static_cast<std::size_t>(m));
  for (int idx : order) {
    const Vec& p = pts[static_cast<std::size_t>(idx)];
    for (Eigen::Index d = 0; d < m; ++d) cand[static_cast<std::size_t>(d)] = p[d];
    bool dominated = false;
    const double* row = acc.data();
    const double* end = acc.data() + acc.size();
    for (; row != end; row += m) {
      bool strict = false;
      Eigen::Index d = 0;
      for (; d < m; ++d) {
        if (row[d] > cand[static_cast<std::size_t>(d)]) break;
        if (row[d] < cand[static_cast<std::size_t>(d)]) strict = true;
      }
      if (d == m && strict) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      acc.insert(acc.end(), cand.begin(), cand.end());
      keep[static_cast<std::size_t>(idx)] = 1;
    }
  }
  return keep;
}

std::vector<Vec> filter_nd(const std::vector<Vec>& pts) {
  std::vector<char> keep = nd_flags(pts);
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (keep[i]) out.push_back(pts[i]);
  return out;
}

std::vector<Vec> inside_ref(const std::vector<Vec>& pts, const Vec& ref) {
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (const Vec& p : pts)
    if (strictly_inside(p, ref)) out.push_back(p);
  return out;
}

// ------------------------------------------------ 3-D contribution sweep

// All exclusive volumes of a mutually non-dominated, duplicate-free point
// set in one pass. A plane sweeps upward in f3; each staircase member
// accrues (its exclusive 2-D area) x (height advanced), updated lazily when
// an arriving point changes its neighbourhood or dominates it.
std::vector<double> contributions3d(const std::vector<Vec>& pts, const Vec& ref) {
  const std::size_t n = pts.size();
  std::vector<double> out(n, 0.0);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Vec& p = pts[static_cast<std::size_t>(a)];
    const Vec& q = pts[static_cast<std::size_t>(b)];
    if (p[2] != q[2]) return p[2] < q[2];
    if (p[0] != q[0]) return p[0] < q[0];
    return p[1] < q[1];
  });

  struct Ent {
    double y;
    double area;
    double z_last;
    int idx;
    // Corner points this member displaced on arrival. They keep covering
    // their quadrants, so they stay subtracted from the exclusive area.
    std::vector<std::pair<double, double>> blocked;
  };
  std::map<double, Ent> stairs;
  auto flush = [&](Ent& e, double z) {
    out[static_cast<std::size_t>(e.idx)] += e.area * (z - e.z_last);
    e.z_last = z;
  };
  auto area_of = [&](std::map<double, Ent>::iterator it) {
    auto nx = std::next(it);
    const double x_next = nx == stairs.end() ? ref[0] : nx->first;
    const double y_prev = it == stairs.begin() ? ref[1] : std::prev(it)->second.y;
    double area = (x_next - it->first) * (y_prev - it->second.y);
    const auto& blk = it->second.blocked;
    for (std::size_t k = 0; k < blk.size(); ++k) {
      const double x_lo = std::min(blk[k].first, x_next);
      const double x_hi = std::min(k + 1 < blk.size() ? blk[k + 1].first : x_next, x_next);
      const double height = y_prev - blk[k].second;
      if (x_hi > x_lo && height > 0.0) area -= (x_hi - x_lo) * height;
    }
    return area;
  };

  for (int i : order) {
    const Vec& q = pts[static_cast<std::size_t>(i)];
    std::vector<std::pair<double, double>> blocked;
    auto succ = stairs.lower_bound(q[0]);
    while (succ != stairs.end() && succ->second.y >= q[1]) {
      flush(succ->second, q[2]);
      blocked.emplace_back(succ->first, succ->second.y);
      succ = stairs.erase(succ);
    }
    auto it = stairs.emplace_hint(succ, q[0], Ent{q[1], 0.0, q[2], i, std::move(blocked)});
    if (it != stairs.begin()) {
      auto left = std::prev(it);
      flush(left->second, q[2]);
      left->second.area = area_of(left);
    }
    auto right = std::next(it);
    if (right != stairs.end()) {
      flush(right->second, q[2]);
      right->second.area = area_of(right);
    }
    it->second.area = area_of(it);
  }
  for (auto& [x, e] : stairs) flush(e, ref[2]);
  return out;
}

}  // namespace

// --------------------------------------------------------------- public API

Vec normalize(const Vec& f, const NormalizationBounds& b) {
  return (f - b.z_ideal).cwiseQuotient(b.z_nadir - b.z_ideal);
}

std::vector<int> nondominated_indices(const std::vector<Vec>& points) {
  std::vector<char> keep = nd_flags(points);
  std::vector<int> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (keep[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Vec> nondominated_filter(const std::vector<Vec>& points) {
  return filter_nd(points);
}

double hypervolume(const std::vector<Vec>& points, const Vec& ref) {
  if (ref.size() < 2) throw std::invalid_argument("hypervolume: need at least 2 objectives");
  std::vector<Vec> pts = inside_ref(points, ref);
  if (pts.empty()) return 0.0;
  if (ref.size() >= 4) pts = filter_nd(dedup_exact(std::move(pts)));
  return hv_dispatch(std::move(pts), ref);
}

double hypervolume(const std::vector<Vec>& points, const ReferencePoint& ref) {
  return hypervolume(points, ref.r);
}

std::vector<double> hv_contributions(const std::vector<Vec>& points, const Vec& ref) {
  const std::size_t n = points.size();
  std::vector<double> contrib(n, 0.0);
  if (n == 0) return contrib;
  if (ref.size() < 2) throw std::invalid_argument("hv_contributions: need at least 2 objectives");
  const Eigen::Index m = points.front().size();

  // Only points strictly inside the reference box can own volume. Any
  // dominator of such a point is itself inside the box, so dominance and
  // duplicate bookkeeping can stay within this candidate set.
  std::vector<int> cand;
  for (std::size_t i = 0; i < n; ++i)
    if (strictly_inside(points[i], ref)) cand.push_back(static_cast<int>(i));
  if (cand.empty()) return contrib;
  const std::size_t nc = cand.size();

  std::vector<Vec> cpts;
  cpts.reserve(nc);
  for (int i : cand) cpts.push_back(points[static_cast<std::size_t>(i)]);
  const std::vector<char> nd = nd_flags(cpts);

  std::vector<char> dup(nc, 0);
  {
    std::vector<int> order(nc);
    std::iota(order.begin(), order.end(), 0);
    auto lex_less = [&](int a, int b) {
      const Vec& p = cpts[static_cast<std::size_t>(a)];
      const Vec& q = cpts[static_cast<std::size_t>(b)];
      for (Eigen::Index d = 0; d < m; ++d)
        if (p[d] != q[d]) return p[d] < q[d];
      return false;
    };
    std::sort(order.begin(), order.end(), lex_less);
    for (std::size_t i = 1; i < nc; ++i)
      if (cpts[static_cast<std::size_t>(order[i - 1])] == cpts[static_cast<std::size_t>(order[i])]) {
        dup[static_cast<std::size_t>(order[i - 1])] = 1;
        dup[static_cast<std::size_t>(order[i])] = 1;
      }
  }

  // A duplicated or dominated point owns nothing: removing it leaves the
  // covered region unchanged.
  std::vector<int> owners;
  for (std::size_t i = 0; i < nc; ++i)
    if (nd[i] && !dup[i]) owners.push_back(static_cast<int>(i));
  if (owners.empty()) return contrib;
  const bool clean = owners.size() == nc;

  if (clean && m == 2) {
    std::vector<int> order = owners;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return cpts[static_cast<std::size_t>(a)][0] < cpts[static_cast<std::size_t>(b)][0];
    });
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Vec& p = cpts[static_cast<std::size_t>(order[k])];
      const double next_x =
          k + 1 < order.size() ? cpts[static_cast<std::size_t>(order[k + 1])][0] : ref[0];
      const double prev_y = k > 0 ? cpts[static_cast<std::size_t>(order[k - 1])][1] : ref[1];
      contrib[static_cast<std::size_t>(cand[static_cast<std::size_t>(order[k])])] =
          std::max(0.0, (next_x - p[0]) * (prev_y - p[1]));
    }
    return contrib;
  }

  if (clean && m == 3) {
    std::vector<double> c3 = contributions3d(cpts, ref);
    for (std::size_t i = 0; i < nc; ++i)
      contrib[static_cast<std::size_t>(cand[i])] = std::max(0.0, c3[i]);
    return contrib;
  }

  // Exclusive volume of each owner against every other candidate; dominated
  // and duplicated candidates still cover volume and must be subtracted.
  for (int o : owners) {
    const Vec& p = cpts[static_cast<std::size_t>(o)];
    std::vector<Vec> limits;
    limits.reserve(nc - 1);
    for (std::size_t j = 0; j < nc; ++j)
      if (static_cast<int>(j) != o) limits.push_back(limit_point(p, cpts[j]));
    const double covered = hv_dispatch(filter_nd(dedup_exact(std::move(limits))), ref);
    contrib[static_cast<std::size_t>(cand[static_cast<std::size_t>(o)])] =
        std::max(0.0, inclusive_volume(p, ref) - covered);
  }
  return contrib;
}

double additive_epsilon(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("additive_epsilon: length mismatch");
  return (a - b).maxCoeff();
}

std::vector<int> subset_select_indices(const std::vector<Vec>& points, int k) {
  const std::size_t n = points.size();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (k < 1) throw std::invalid_argument("subset_select: k must be >= 1");
  if (n <= static_cast<std::size_t>(k)) return all;
  const Eigen::Index m = points.front().size();

  Vec lo = points.front(), hi = points.front();
  for (const Vec& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  Vec width = hi - lo;
  for (Eigen::Index d = 0; d < m; ++d)
    if (!(width[d] > 0.0)) width[d] = 1.0;

  std::vector<Vec> norm(n);
  for (std::size_t i = 0; i < n; ++i) norm[i] = (points[i] - lo).cwiseQuotient(width);

  std::vector<char> selected(n, 0);
  std::vector<int> chosen;
  auto pick = [&](int idx) {
    selected[static_cast<std::size_t>(idx)] = 1;
    chosen.push_back(idx);
  };

  for (Eigen::Index d = 0; d < m && chosen.size() < static_cast<std::size_t>(k); ++d) {
    int best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (selected[i]) continue;
      if (best < 0 || norm[i][d] < norm[static_cast<std::size_t>(best)][d]) best = static_cast<int>(i);
    }
    if (best >= 0 && !selected[static_cast<std::size_t>(best)]) pick(best);
  }

  std::vector<double> mind2(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    if (selected[i]) continue;
    for (int c : chosen)
      mind2[i] = std::min(mind2[i], (norm[i] - norm[static_cast<std::size_t>(c)]).squaredNorm());
  }
  while (chosen.size() < static_cast<std::size_t>(k)) {
    int best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (selected[i]) continue;
      if (best < 0 || mind2[i] > mind2[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
    }
    pick(best);
    for (std::size_t i = 0; i < n; ++i) {
      if (selected[i]) continue;
      mind2[i] = std::min(mind2[i], (norm[i] - norm[static_cast<std::size_t>(best)]).squaredNorm());
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<Vec> subset_select(const std::vector<Vec>& points, int k) {
  std::vector<int> idx = subset_select_indices(points, k);
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(points[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace rebench
