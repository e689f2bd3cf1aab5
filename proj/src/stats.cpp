#include "rebench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rebench {
namespace {

// Doubled midranks of the pooled sample (doubling keeps tied midranks
// integral), returned in pool order: first a's entries, then b's.
std::vector<long long> doubled_midranks(const std::vector<double>& a,
                                        const std::vector<double>& b) {
  const std::size_t n = a.size() + b.size();
  std::vector<double> pool;
  pool.reserve(n);
  pool.insert(pool.end(), a.begin(), a.end());
  pool.insert(pool.end(), b.begin(), b.end());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return pool[static_cast<std::size_t>(i)] < pool[static_cast<std::size_t>(j)]; });
  std::vector<long long> dr(n, 0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && pool[static_cast<std::size_t>(order[j])] == pool[static_cast<std::size_t>(order[i])]) ++j;
    // ranks i+1 .. j, doubled midrank = (i+1) + j
    const long long dmr = static_cast<long long>(i + 1) + static_cast<long long>(j);
    for (std::size_t k = i; k < j; ++k) dr[static_cast<std::size_t>(order[k])] = dmr;
    i = j;
  }
  return dr;
}

void check_sizes(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < 2 || b.size() < 2)
    throw std::invalid_argument("wilcoxon_rank_sum: need at least 2 values per sample");
  for (double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument("wilcoxon_rank_sum: non-finite value");
  for (double v : b)
    if (!std::isfinite(v)) throw std::invalid_argument("wilcoxon_rank_sum: non-finite value");
}

}  // namespace

double wilcoxon_exact_p(const std::vector<double>& a, const std::vector<double>& b) {
  check_sizes(a, b);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na + nb;
  std::vector<long long> dr = doubled_midranks(a, b);

  long long w_b = 0;
  for (std::size_t i = na; i < n; ++i) w_b += dr[i];
  long long total = 0;
  for (long long v : dr) total += v;

  // Count size-k subsets of the pooled doubled midranks by sum; p is the
  // fraction of assignments whose b-sum is at least the observed one.
  // Counting the smaller group keeps the table narrow; choosing a's
  // elements with small sums is the mirror image of choosing b's with
  // large ones.
  std::size_t k = nb;
  long long threshold = w_b;  // count subsets with sum >= threshold
  bool count_ge = true;
  if (na < nb) {
    k = na;
    threshold = total - w_b;  // a-sum <= total - w_b
    count_ge = false;
  }

  std::vector<std::vector<double>> dp(k + 1, std::vector<double>(static_cast<std::size_t>(total) + 1, 0.0));
  dp[0][0] = 1.0;
  for (std::size_t item = 0; item < n; ++item) {
    const auto v = static_cast<std::size_t>(dr[item]);
    const std::size_t kmax = std::min(k, item + 1);
    for (std::size_t kk = kmax; kk >= 1; --kk) {
      auto& row = dp[kk];
      const auto& prev = dp[kk - 1];
      for (std::size_t s = static_cast<std::size_t>(total); s >= v; --s) row[s] += prev[s - v];
    }
  }

  double extreme = 0.0;
  double all = 0.0;
  for (std::size_t s = 0; s <= static_cast<std::size_t>(total); ++s) {
    all += dp[k][s];
    const bool in_tail = count_ge ? static_cast<long long>(s) >= threshold
                                  : static_cast<long long>(s) <= threshold;
    if (in_tail) extreme += dp[k][s];
  }
  return extreme / all;
}

double wilcoxon_normal_p(const std::vector<double>& a, const std::vector<double>& b) {
  check_sizes(a, b);
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  const double n = na + nb;
  std::vector<long long> dr = doubled_midranks(a, b);

  double w_b = 0.0;
  for (std::size_t i = a.size(); i < dr.size(); ++i) w_b += static_cast<double>(dr[i]) / 2.0;

  // Tie correction over groups of equal doubled midranks.
  std::vector<long long> sorted = dr;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const auto t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  const double mean = nb * (n + 1.0) / 2.0;
  const double var = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (!(var > 0.0)) return 1.0;
  const double z = (w_b - mean - 0.5) / std::sqrt(var);
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

double wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b,
                         Alternative alt) {
  (void)alt;  // single alternative
  if (std::min(a.size(), b.size()) < 20) return wilcoxon_exact_p(a, b);
  return wilcoxon_normal_p(a, b);
}

std::vector<int> performance_scores(const std::vector<std::vector<double>>& samples,
                                    double alpha) {
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("performance_scores: need at least 2 algorithms");
  std::vector<int> score(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (wilcoxon_rank_sum(samples[i], samples[j]) < alpha) ++score[i];
    }
  return score;
}

std::vector<int> rank_from_scores(const std::vector<int>& scores) {
  std::vector<int> ranks(scores.size(), 1);
  for (std::size_t i = 0; i < scores.size(); ++i)
    for (std::size_t j = 0; j < scores.size(); ++j)
      if (scores[j] < scores[i]) ++ranks[i];
  return ranks;
}

}  // namespace rebench
