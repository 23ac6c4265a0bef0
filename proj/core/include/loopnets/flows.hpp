#pragma once

#include <Eigen/Dense>
#include <vector>

#include "loopnets/graph.hpp"

namespace loopnets {

/// A flow is an Eulerian network with no two-way traffic on any edge.
bool is_flow(const Eigen::MatrixXi& j);

/// Positive part of an antisymmetric integer matrix; inverse of
/// homology_of_flow.
Eigen::MatrixXi flow_of(const Eigen::MatrixXi& hclass);
Eigen::MatrixXi homology_of_flow(const Eigen::MatrixXi& j);

/// Markovian matrix q(x,y) = j_{x,y} / j_x (identity row where j_x = 0);
/// preserves the measure j_x.
Eigen::MatrixXd flow_markov(const Eigen::MatrixXi& j);

/// S_x = j_x^2 - sum_y j_{x,y}^2.
long stochasticity(const Eigen::MatrixXi& j, int x);

/// Joint density of (flow of the homology class = h, occupation in d rho):
/// det(I-P) prod_edges I_{h_e}(2 sqrt(rho_x rho_y) C_xy) prod_x lambda e^{-lambda rho}.
double flow_joint_density(const MarkovData& md, const WeightedGraph& g,
                          const Eigen::MatrixXi& flow,
                          const Eigen::VectorXd& rho);

/// rho-marginal P(flow = h) by tensor Gauss-Laguerre quadrature.
double flow_marginal_pmf(const MarkovData& md, const WeightedGraph& g,
                         const Eigen::MatrixXi& flow, int quad_nodes);

/// All flows with every edge count <= max_per_edge.
std::vector<Eigen::MatrixXi> enumerate_flows(const WeightedGraph& g,
                                             int max_per_edge);

}  // namespace loopnets
