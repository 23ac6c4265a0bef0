#include "loopnets/graph.hpp"

#include <Eigen/Eigenvalues>
#include <queue>
#include <stdexcept>

namespace loopnets {

WeightedGraph::WeightedGraph(int num_vertices, std::vector<Edge> edges,
                             std::vector<double> killing)
    : n_(num_vertices), edges_(std::move(edges)), killing_(std::move(killing)) {
  if (n_ <= 0) throw std::invalid_argument("graph needs at least one vertex");
  if (static_cast<int>(killing_.size()) != n_)
    throw std::invalid_argument("killing measure size != vertex count");
  adj_.resize(n_);
  incident_.resize(n_);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop edges not allowed");
    if (e.c <= 0) throw std::invalid_argument("conductance must be positive");
    if (edge_index(e.u, e.v) >= 0)
      throw std::invalid_argument("duplicate edge");
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    incident_[e.u].push_back({e.v, i});
    incident_[e.v].push_back({e.u, i});
  }
  bool has_killing = false;
  for (double k : killing_) {
    if (k < 0) throw std::invalid_argument("killing measure must be >= 0");
    if (k > 0) has_killing = true;
  }
  if (!has_killing)
    throw std::invalid_argument("transience requires some positive killing");
  // connectivity
  std::vector<char> seen(n_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj_[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        q.push(y);
      }
  }
  if (count != n_) throw std::invalid_argument("graph must be connected");
}

int WeightedGraph::edge_index(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) return -1;
  for (const auto& [nbr, idx] : incident_[x])
    if (nbr == y) return idx;
  return -1;
}

double WeightedGraph::conductance(int x, int y) const {
  int idx = edge_index(x, y);
  return idx < 0 ? 0.0 : edges_[idx].c;
}

Eigen::MatrixXd WeightedGraph::conductance_matrix() const {
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n_, n_);
  for (const Edge& e : edges_) {
    C(e.u, e.v) = e.c;
    C(e.v, e.u) = e.c;
  }
  return C;
}

WeightedGraph WeightedGraph::complete(int d, double kappa) {
  std::vector<Edge> edges;
  for (int u = 0; u < d; ++u)
    for (int v = u + 1; v < d; ++v) edges.push_back({u, v, 1.0});
  return WeightedGraph(d, std::move(edges), std::vector<double>(d, kappa));
}

WeightedGraph WeightedGraph::path(int n, double kappa) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 1.0});
  return WeightedGraph(n, std::move(edges), std::vector<double>(n, kappa));
}

Eigen::VectorXd duality_measure(const WeightedGraph& g) {
  const int n = g.num_vertices();
  Eigen::VectorXd lambda(n);
  Eigen::MatrixXd C = g.conductance_matrix();
  for (int x = 0; x < n; ++x) lambda(x) = C.row(x).sum() + g.killing()[x];
  return lambda;
}

Eigen::MatrixXd transition_matrix(const WeightedGraph& g) {
  Eigen::VectorXd lambda = duality_measure(g);
  return lambda.cwiseInverse().asDiagonal() * g.conductance_matrix();
}

MarkovData markov_data(const WeightedGraph& g) {
  MarkovData md;
  md.C = g.conductance_matrix();
  md.lambda = duality_measure(g);
  md.P = md.lambda.cwiseInverse().asDiagonal() * md.C;
  md.energy = Eigen::MatrixXd(md.lambda.asDiagonal()) - md.C;

  Eigen::LLT<Eigen::MatrixXd> llt_energy(md.energy);
  if (llt_energy.info() != Eigen::Success)
    throw std::runtime_error("energy form M_lambda - C is not positive definite");
  const int n = g.num_vertices();
  md.G = llt_energy.solve(Eigen::MatrixXd::Identity(n, n));
  md.G = 0.5 * (md.G + md.G.transpose());  // kill inversion asymmetry

  Eigen::MatrixXd L = llt_energy.matrixL();
  md.det_energy = 1.0;
  for (int i = 0; i < n; ++i) md.det_energy *= L(i, i) * L(i, i);
  md.det_i_minus_p = md.det_energy / md.lambda.prod();

  Eigen::LLT<Eigen::MatrixXd> llt_g(md.G);
  if (llt_g.info() != Eigen::Success)
    throw std::runtime_error("Green function is not positive definite");
  md.chol = llt_g.matrixL();

  // P is conjugate to the symmetric matrix C_xy / sqrt(lambda_x lambda_y).
  Eigen::VectorXd s = md.lambda.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd sym = s.asDiagonal() * md.C * s.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  md.spectral_radius = es.eigenvalues().cwiseAbs().maxCoeff();
  return md;
}

Eigen::MatrixXd green_function(const WeightedGraph& g) {
  return markov_data(g).G;
}

double det_i_minus_p(const WeightedGraph& g) {
  return markov_data(g).det_i_minus_p;
}

}  // namespace loopnets
