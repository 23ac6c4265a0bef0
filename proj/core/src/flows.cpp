#include "loopnets/flows.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "loopnets/bessel.hpp"
#include "loopnets/linalg.hpp"
#include "loopnets/networks.hpp"

namespace loopnets {

double bessel_i(int nu, double x) {
  if (nu < 0) throw std::invalid_argument("bessel_i: nu must be >= 0");
  if (x < 0) throw std::invalid_argument("bessel_i: x must be >= 0");
  if (x == 0) return nu == 0 ? 1.0 : 0.0;
  // term_0 = (x/2)^nu / nu!, term ratio (x/2)^2 / (m (nu+m))
  double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
  double sum = term;
  const double q = 0.25 * x * x;
  for (int m = 1; m < 10000; ++m) {
    term *= q / (static_cast<double>(m) * (nu + m));
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double log_bessel_i(int nu, double x) {
  if (x == 0) return nu == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  // factor the leading term out of the series to stay in range
  const double log_lead = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
  double term = 1.0;
  double sum = 1.0;
  const double q = 0.25 * x * x;
  // for large x the series needs many terms; rescale by the running max
  double scale = 0.0;
  for (int m = 1; m < 100000; ++m) {
    term *= q / (static_cast<double>(m) * (nu + m));
    if (term > 1e280) {
      const double f = 1e-280;
      term *= f;
      sum *= f;
      scale -= std::log(f);
    }
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return log_lead + std::log(sum) + scale;
}

bool is_flow(const Eigen::MatrixXi& j) {
  if (!is_eulerian(j)) return false;
  for (int x = 0; x < j.rows(); ++x)
    for (int y = x + 1; y < j.cols(); ++y)
      if (j(x, y) != 0 && j(y, x) != 0) return false;
  return true;
}

Eigen::MatrixXi flow_of(const Eigen::MatrixXi& hclass) {
  return hclass.cwiseMax(0);
}

Eigen::MatrixXi homology_of_flow(const Eigen::MatrixXi& j) {
  return j - Eigen::MatrixXi(j.transpose());
}

Eigen::MatrixXd flow_markov(const Eigen::MatrixXi& j) {
  const int n = static_cast<int>(j.rows());
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    const int jx = j.row(x).sum();
    if (jx == 0) {
      q(x, x) = 1.0;
    } else {
      for (int y = 0; y < n; ++y) q(x, y) = static_cast<double>(j(x, y)) / jx;
    }
  }
  return q;
}

long stochasticity(const Eigen::MatrixXi& j, int x) {
  const long jx = j.row(x).sum();
  long sq = 0;
  for (int y = 0; y < j.cols(); ++y) sq += static_cast<long>(j(x, y)) * j(x, y);
  return jx * jx - sq;
}

double flow_joint_density(const MarkovData& md, const WeightedGraph& g,
                          const Eigen::MatrixXi& flow,
                          const Eigen::VectorXd& rho) {
  if (!is_flow(flow)) throw std::invalid_argument("not a flow");
  if (rho.minCoeff() < 0) throw std::invalid_argument("rho must be >= 0");
  const int n = g.num_vertices();
  double log_d = std::log(md.det_i_minus_p);
  for (int x = 0; x < n; ++x) log_d += std::log(md.lambda(x)) - md.lambda(x) * rho(x);
  for (const Edge& e : g.edges()) {
    const int he = std::max(flow(e.u, e.v), flow(e.v, e.u));
    log_d += log_bessel_i(he, 2.0 * std::sqrt(rho(e.u) * rho(e.v)) * e.c);
  }
  return std::exp(log_d);
}

double flow_marginal_pmf(const MarkovData& md, const WeightedGraph& g,
                         const Eigen::MatrixXi& flow, int quad_nodes) {
  // integrate against prod_x lambda_x e^{-lambda_x rho_x} d rho via
  // Gauss-Laguerre after rho_x = t_x / lambda_x
  const int n = g.num_vertices();
  Quadrature q = gauss_laguerre(quad_nodes);
  Eigen::VectorXd rho(n);
  double total = 0;
  std::function<void(int, double)> rec = [&](int x, double w) {
    if (x == n) {
      double log_f = 0;
      for (const Edge& e : g.edges()) {
        const int he = std::max(flow(e.u, e.v), flow(e.v, e.u));
        log_f += log_bessel_i(he, 2.0 * std::sqrt(rho(e.u) * rho(e.v)) * e.c);
      }
      total += w * std::exp(log_f);
      return;
    }
    for (int i = 0; i < quad_nodes; ++i) {
      rho(x) = q.nodes(i) / md.lambda(x);
      rec(x + 1, w * q.weights(i));
    }
  };
  rec(0, 1.0);
  return md.det_i_minus_p * total;
}

std::vector<Eigen::MatrixXi> enumerate_flows(const WeightedGraph& g,
                                             int max_per_edge) {
  const int n = g.num_vertices();
  std::vector<Eigen::MatrixXi> out;
  const auto& edges = g.edges();
  Eigen::MatrixXi j = Eigen::MatrixXi::Zero(n, n);
  // per edge: signed value in [-max, max]; positive = u->v, negative = v->u
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == edges.size()) {
      if (is_flow(j)) out.push_back(j);
      return;
    }
    const Edge& e = edges[i];
    for (int v = -max_per_edge; v <= max_per_edge; ++v) {
      j(e.u, e.v) = std::max(v, 0);
      j(e.v, e.u) = std::max(-v, 0);
      rec(i + 1);
    }
    j(e.u, e.v) = 0;
    j(e.v, e.u) = 0;
  };
  rec(0);
  return out;
}

}  // namespace loopnets
