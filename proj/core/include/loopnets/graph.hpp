#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace loopnets {

struct Edge {
  int u = 0;
  int v = 0;
  double c = 1.0;  // conductance, > 0
};

/// Finite connected weighted graph with a killing measure on vertices.
/// No self-loop edges, no duplicate edges, and at least one positive
/// killing rate (so the energy form M_lambda - C is positive definite).
class WeightedGraph {
 public:
  WeightedGraph(int num_vertices, std::vector<Edge> edges,
                std::vector<double> killing);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& killing() const { return killing_; }

  bool has_edge(int x, int y) const { return edge_index(x, y) >= 0; }
  /// Index into edges() of the unordered pair {x,y}, or -1.
  int edge_index(int x, int y) const;
  double conductance(int x, int y) const;
  const std::vector<int>& neighbors(int x) const { return adj_[x]; }

  /// Symmetric conductance matrix C (zero diagonal).
  Eigen::MatrixXd conductance_matrix() const;

  /// Complete graph on d vertices, unit conductances, constant killing.
  static WeightedGraph complete(int d, double kappa);
  /// Path graph 0-1-...-(n-1), unit conductances, constant killing.
  static WeightedGraph path(int n, double kappa);

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<double> killing_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<std::pair<int, int>>> incident_;  // (neighbor, edge idx)
};

/// Markov quantities derived from a graph; immutable after construction.
struct MarkovData {
  Eigen::VectorXd lambda;    // duality measure: lambda_x = sum_y C_xy + kappa_x
  Eigen::MatrixXd C;         // conductances
  Eigen::MatrixXd P;         // P(x,y) = C_xy / lambda_x, zero diagonal
  Eigen::MatrixXd energy;    // M_lambda - C
  Eigen::MatrixXd G;         // (M_lambda - C)^{-1}, symmetric PD
  Eigen::MatrixXd chol;      // lower-triangular factor, chol * chol^T = G
  double det_energy = 0;     // det(M_lambda - C)
  double det_i_minus_p = 0;  // det(I - P) in (0, 1]
  double spectral_radius = 0;  // of P, < 1
};

MarkovData markov_data(const WeightedGraph& g);

Eigen::VectorXd duality_measure(const WeightedGraph& g);
Eigen::MatrixXd transition_matrix(const WeightedGraph& g);
Eigen::MatrixXd green_function(const WeightedGraph& g);
double det_i_minus_p(const WeightedGraph& g);

}  // namespace loopnets
