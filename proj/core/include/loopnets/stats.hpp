#pragma once

#include <string>
#include <vector>

namespace loopnets {

struct McEstimate {
  double mean = 0;
  double se = 0;
  long n = 0;
};

/// Streaming mean/variance (Welford).
class MeanAccumulator {
 public:
  void add(double x);
  McEstimate estimate() const;
  long count() const { return n_; }

 private:
  long n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

McEstimate mc_mean(const std::vector<double>& xs);

/// |mean - target| <= nsigma * se (se floor guards exact estimators).
bool within_se(const McEstimate& e, double target, double nsigma = 3.0);

struct GofCell {
  std::string label;
  double observed = 0;
  double expected = 0;
};

struct GofReport {
  double statistic = 0;
  int df = 0;
  double p_value = 1;
  std::vector<GofCell> cells;  // after pooling
  int pooled = 0;              // cells merged into the tail
};

/// Goodness of fit of observed counts against exact cell probabilities.
/// probs may sum to less than one; the remainder forms a tail cell together
/// with tail_observed. Cells with expected count < min_expected are pooled
/// into the tail.
GofReport chi_square_gof(const std::vector<long>& observed, long tail_observed,
                         const std::vector<double>& probs, long n,
                         double min_expected = 5.0);

/// Two-sample homogeneity chi-square over matching cells.
GofReport chi_square_two_sample(const std::vector<long>& a,
                                const std::vector<long>& b,
                                double min_expected = 5.0);

/// Chi-square independence test on an r x c contingency table.
GofReport independence_test(const std::vector<std::vector<long>>& table);

struct KsReport {
  double statistic = 0;
  double p_value = 1;
};

/// Two-sample Kolmogorov-Smirnov with the asymptotic p-value.
KsReport ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Upper regularized incomplete gamma Q(a, x).
double gamma_q(double a, double x);
/// Chi-square upper tail with df degrees of freedom.
double chi_square_tail(double statistic, int df);

}  // namespace loopnets
