#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "loopnets/graph.hpp"
#include "loopnets/loops.hpp"
#include "loopnets/rng.hpp"

namespace loopnets {

/// Masses m_k = trace(P^k)/k of the discrete loop measure, k = 2..k_max,
/// with an explicit bound on the truncated tail sum_{k > k_max} |X| r^k / k.
struct LoopMasses {
  int k_max = 0;
  std::vector<double> mass;  // mass[k], entries 0,1 unused (zero)
  double total = 0;          // sum of retained masses
  double tail_bound = 0;
};

LoopMasses loop_length_masses(const MarkovData& md, int k_max);

/// Smallest k_max whose tail bound is below eps (capped at 100000).
int default_k_max(const MarkovData& md, double tail_eps = 1e-9);

struct LoopEnsemble {
  std::vector<DiscreteLoop> loops;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  int k_max = 0;
  double tail_bound = 0;
};

/// Poissonian ensemble of discrete loops with intensity alpha * mu,
/// truncated at length k_max. Bridge construction: loop count is
/// Poisson(alpha * sum m_k), lengths follow m_k, the start vertex follows
/// (P^k)_xx / tr(P^k), and steps follow the Markov bridge back to the start.
class SoupSampler {
 public:
  SoupSampler(const WeightedGraph& g, const MarkovData& md, double alpha,
              int k_max);

  LoopEnsemble sample(std::uint64_t seed) const;
  /// Oriented jump counts of one ensemble draw (skips loop storage).
  Eigen::MatrixXi sample_network(RngEngine& rng) const;

  const LoopMasses& masses() const { return masses_; }
  double mean_loop_count() const { return alpha_ * masses_.total; }

 private:
  std::vector<int> sample_based_loop(int k, RngEngine& rng) const;

  const WeightedGraph& g_;
  const MarkovData& md_;
  double alpha_;
  LoopMasses masses_;
  std::vector<Eigen::MatrixXd> powers_;       // P^0 .. P^k_max
  std::vector<double> length_cdf_;            // over k = 2..k_max
  std::vector<std::vector<double>> start_cdf_;  // per length, over vertices
};

LoopEnsemble sample_ensemble(const WeightedGraph& g, const MarkovData& md,
                             double alpha, int k_max, std::uint64_t seed);

/// Oriented traversal counts N(x,y) accumulated over the ensemble.
Eigen::MatrixXi edge_network(const LoopEnsemble& ens, int num_vertices);

/// Conditional vertex occupation field given per-vertex jump totals.
/// alpha = 1: rho_x ~ Gamma(totals_x + 1, rate lambda_x);
/// alpha = 1/2: rho_x ~ Gamma(totals_x + 1/2, rate lambda_x).
Eigen::VectorXd occupation_field(const MarkovData& md,
                                 const Eigen::VectorXi& totals, double alpha,
                                 RngEngine& rng);

/// Per-vertex jump totals of an oriented network (row sums).
Eigen::VectorXi network_totals(const Eigen::MatrixXi& net);

/// Wilson-type sweep: at each vertex of `order`, runs the killed chain
/// restricted to later vertices and keeps the excursions that return.
struct ExitConfiguration {
  // dest[x] lists destinations of the exit half-edges at x in consumption order
  std::vector<std::vector<int>> dest;
};

struct WilsonSample {
  std::vector<BasedLoop> loops;  // at most one based loop per vertex
  ExitConfiguration exits;
};

WilsonSample wilson_sample(const WeightedGraph& g, const MarkovData& md,
                           const std::vector<int>& order, std::uint64_t seed);

/// Deterministic inverse of the sweep: rebuild the based loops from an exit
/// configuration by consuming exit half-edges in increasing order.
std::vector<BasedLoop> loops_from_exit_configuration(
    const ExitConfiguration& exits, const std::vector<int>& order);

/// Chinese-restaurant partition of the excursions of a based loop
/// (EPPF prod (n_i - 1)! / n!) mapped to unbased loops.
std::vector<DiscreteLoop> eppf_split(const BasedLoop& loop, RngEngine& rng);

}  // namespace loopnets
