#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "loopnets/graph.hpp"

namespace loopnets {

/// Oriented networks are integer matrices with zero diagonal supported on
/// graph edges; Eulerian means in-flow equals out-flow at every vertex.
bool is_network(const WeightedGraph& g, const Eigen::MatrixXi& k);
bool is_eulerian(const Eigen::MatrixXi& k);

/// Even networks are symmetric integer matrices (counts per unordered edge)
/// whose row sums are even; the vertex total k_x is half the row sum.
bool is_even_network(const Eigen::MatrixXi& ksym);

Eigen::MatrixXi symmetrize(const Eigen::MatrixXi& k);  // k + k^T

/// P(N^{(1)} = k): det(I-P) prod_x k_x! / prod_{x,y} k_{x,y}! prod P^k.
double pmf_eulerian(const MarkovData& md, const Eigen::MatrixXi& k);
double log_pmf_eulerian(const MarkovData& md, const Eigen::MatrixXi& k);

/// Joint density of (N^{(1)} = k, occupation field in d rho).
double joint_density_eulerian(const MarkovData& md, const Eigen::MatrixXi& k,
                              const Eigen::VectorXd& rho);

/// P(symmetrized N^{(1/2)} = k) for an even network k. The per-edge base is
/// the symmetrized step weight sqrt(P_xy P_yx); this is the unique reading
/// with total mass one when lambda differs across an edge.
double pmf_even(const MarkovData& md, const Eigen::MatrixXi& ksym);
double log_pmf_even(const MarkovData& md, const Eigen::MatrixXi& ksym);

/// Joint density of (symmetrized N^{(1/2)} = k, occupation field in d rho);
/// factorizes over vertices as Gamma(k_x + 1/2, rate lambda_x).
double joint_density_even(const MarkovData& md, const Eigen::MatrixXi& ksym,
                          const Eigen::VectorXd& rho);

/// Antisymmetric part k - k^T (the homology class of the network).
Eigen::MatrixXi homology_class(const Eigen::MatrixXi& k);

/// R_x = N_x^2 - sum_y N_{x,y}^2 per vertex.
Eigen::VectorXi r_field(const Eigen::MatrixXi& k);

/// All Eulerian networks with total jump count <= max_total, in
/// lexicographic order of the flattened oriented-edge counts.
std::vector<Eigen::MatrixXi> enumerate_eulerian_networks(const WeightedGraph& g,
                                                         int max_total);

/// All even networks with total edge count <= max_total, lexicographic in
/// the per-edge counts.
std::vector<Eigen::MatrixXi> enumerate_even_networks(const WeightedGraph& g,
                                                     int max_total);

/// Monte Carlo check of the quasi-invariance identity
///   E(F(N + k)) = E(1_{N >= k} F(N) prod_x (N_x-k_x)!/N_x!
///                  prod_{x,y} N_{x,y}!/(N_{x,y}-k_{x,y})! P_{x,y}^{-k_{x,y}}).
struct QuasiInvarianceResult {
  double lhs = 0, lhs_se = 0;
  double rhs = 0, rhs_se = 0;
};
QuasiInvarianceResult quasi_invariance_check(
    const WeightedGraph& g, const MarkovData& md, const Eigen::MatrixXi& k,
    const std::function<double(const Eigen::MatrixXi&)>& f, int samples,
    std::uint64_t seed);

}  // namespace loopnets
