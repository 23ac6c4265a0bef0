#include "loopnets/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace loopnets {

void MeanAccumulator::add(double x) {
  ++n_;
  const double d = x - mean_;
  mean_ += d / n_;
  m2_ += d * (x - mean_);
}

McEstimate MeanAccumulator::estimate() const {
  McEstimate e;
  e.n = n_;
  e.mean = mean_;
  if (n_ >= 2) e.se = std::sqrt(m2_ / (n_ - 1) / n_);
  return e;
}

McEstimate mc_mean(const std::vector<double>& xs) {
  MeanAccumulator acc;
  for (double x : xs) acc.add(x);
  return acc.estimate();
}

bool within_se(const McEstimate& e, double target, double nsigma) {
  const double slack = nsigma * e.se + 1e-12;
  return std::abs(e.mean - target) <= slack;
}

// --- regularized incomplete gamma (series + continued fraction) ---

static double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 1000; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

static double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
  if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q domain");
  if (x == 0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_tail(double statistic, int df) {
  if (df <= 0) return 1.0;
  return gamma_q(0.5 * df, 0.5 * statistic);
}

GofReport chi_square_gof(const std::vector<long>& observed, long tail_observed,
                         const std::vector<double>& probs, long n,
                         double min_expected) {
  if (observed.size() != probs.size())
    throw std::invalid_argument("observed/probs size mismatch");
  GofReport rep;
  double tail_prob = 1.0;
  long tail_obs = tail_observed;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double expected = probs[i] * n;
    if (expected >= min_expected) {
      rep.cells.push_back({"c" + std::to_string(i),
                           static_cast<double>(observed[i]), expected});
      tail_prob -= probs[i];
    } else {
      tail_obs += observed[i];
      ++rep.pooled;
    }
  }
  if (tail_prob > 0 && tail_prob * n >= min_expected)
    rep.cells.push_back({"tail", static_cast<double>(tail_obs), tail_prob * n});
  if (rep.cells.size() < 2) {
    rep.df = 0;
    rep.p_value = 1.0;
    return rep;
  }
  for (const GofCell& c : rep.cells)
    rep.statistic +=
        (c.observed - c.expected) * (c.observed - c.expected) / c.expected;
  rep.df = static_cast<int>(rep.cells.size()) - 1;
  rep.p_value = chi_square_tail(rep.statistic, rep.df);
  return rep;
}

GofReport chi_square_two_sample(const std::vector<long>& a,
                                const std::vector<long>& b,
                                double min_expected) {
  if (a.size() != b.size()) throw std::invalid_argument("cell count mismatch");
  const double na = static_cast<double>(std::accumulate(a.begin(), a.end(), 0L));
  const double nb = static_cast<double>(std::accumulate(b.begin(), b.end(), 0L));
  // pool cells too small on the pooled counts, then compare homogeneity
  std::vector<std::pair<double, double>> cells;
  double pool_a = 0, pool_b = 0;
  GofReport rep;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double pooled_exp = (a[i] + b[i]) * std::min(na, nb) / (na + nb);
    if (pooled_exp >= min_expected) {
      cells.push_back({static_cast<double>(a[i]), static_cast<double>(b[i])});
    } else {
      pool_a += a[i];
      pool_b += b[i];
      ++rep.pooled;
    }
  }
  if (pool_a + pool_b > 0) cells.push_back({pool_a, pool_b});
  if (cells.size() < 2) {
    rep.p_value = 1.0;
    return rep;
  }
  for (auto [oa, ob] : cells) {
    const double tot = oa + ob;
    const double ea = tot * na / (na + nb);
    const double eb = tot * nb / (na + nb);
    rep.statistic += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
    rep.cells.push_back({"", oa, ea});
  }
  rep.df = static_cast<int>(cells.size()) - 1;
  rep.p_value = chi_square_tail(rep.statistic, rep.df);
  return rep;
}

GofReport independence_test(const std::vector<std::vector<long>>& table) {
  GofReport rep;
  const std::size_t r = table.size();
  if (r == 0) return rep;
  const std::size_t c = table[0].size();
  std::vector<double> row_sum(r, 0), col_sum(c, 0);
  double total = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      row_sum[i] += table[i][j];
      col_sum[j] += table[i][j];
      total += table[i][j];
    }
  if (total == 0) return rep;
  int nonzero_rows = 0, nonzero_cols = 0;
  for (double s : row_sum) nonzero_rows += s > 0;
  for (double s : col_sum) nonzero_cols += s > 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (row_sum[i] == 0 || col_sum[j] == 0) continue;
      const double expected = row_sum[i] * col_sum[j] / total;
      rep.statistic += (table[i][j] - expected) * (table[i][j] - expected) /
                       expected;
      rep.cells.push_back({"", static_cast<double>(table[i][j]), expected});
    }
  rep.df = (nonzero_rows - 1) * (nonzero_cols - 1);
  rep.p_value = rep.df > 0 ? chi_square_tail(rep.statistic, rep.df) : 1.0;
  return rep;
}

KsReport ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  KsReport rep;
  rep.statistic = d;
  const double ne = std::sqrt(na * nb / (na + nb));
  const double lambda = (ne + 0.12 + 0.11 / ne) * d;
  double p = 0;
  for (int k = 1; k <= 100; ++k) {
    const double term = 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) *
                        std::exp(-2.0 * k * k * lambda * lambda);
    p += term;
    if (std::abs(term) < 1e-12) break;
  }
  rep.p_value = std::clamp(p, 0.0, 1.0);
  return rep;
}

}  // namespace loopnets
