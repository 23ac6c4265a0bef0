#include "loopnets/networks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loopnets/loop_soup.hpp"

namespace loopnets {

bool is_network(const WeightedGraph& g, const Eigen::MatrixXi& k) {
  const int n = g.num_vertices();
  if (k.rows() != n || k.cols() != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (k(x, y) < 0) return false;
      if (k(x, y) > 0 && !g.has_edge(x, y)) return false;
    }
  return true;
}

bool is_eulerian(const Eigen::MatrixXi& k) {
  if (k.rows() != k.cols()) return false;
  if (k.size() == 0) return true;
  if (k.minCoeff() < 0) return false;
  if ((k.diagonal().array() != 0).any()) return false;
  Eigen::VectorXi in = k.colwise().sum();
  return (k.rowwise().sum().array() == in.array()).all();
}

bool is_even_network(const Eigen::MatrixXi& ksym) {
  if (ksym.rows() != ksym.cols()) return false;
  if (ksym.size() == 0) return true;
  Eigen::MatrixXi t = ksym.transpose();
  if ((ksym.array() != t.array()).any()) return false;
  if (ksym.minCoeff() < 0) return false;
  if ((ksym.diagonal().array() != 0).any()) return false;
  for (int x = 0; x < ksym.rows(); ++x)
    if (ksym.row(x).sum() % 2 != 0) return false;
  return true;
}

Eigen::MatrixXi symmetrize(const Eigen::MatrixXi& k) { return k + k.transpose(); }

double log_pmf_eulerian(const MarkovData& md, const Eigen::MatrixXi& k) {
  if (!is_eulerian(k)) throw std::invalid_argument("network is not Eulerian");
  const int n = static_cast<int>(k.rows());
  double log_p = std::log(md.det_i_minus_p);
  for (int x = 0; x < n; ++x) {
    log_p += std::lgamma(k.row(x).sum() + 1.0);
    for (int y = 0; y < n; ++y) {
      if (k(x, y) == 0) continue;
      if (md.P(x, y) <= 0)
        throw std::invalid_argument("network charges a non-edge");
      log_p -= std::lgamma(k(x, y) + 1.0);
      log_p += k(x, y) * std::log(md.P(x, y));
    }
  }
  return log_p;
}

double pmf_eulerian(const MarkovData& md, const Eigen::MatrixXi& k) {
  return std::exp(log_pmf_eulerian(md, k));
}

double joint_density_eulerian(const MarkovData& md, const Eigen::MatrixXi& k,
                              const Eigen::VectorXd& rho) {
  if (!is_eulerian(k)) throw std::invalid_argument("network is not Eulerian");
  if (rho.minCoeff() < 0) throw std::invalid_argument("rho must be >= 0");
  const int n = static_cast<int>(k.rows());
  double log_d = std::log(md.det_i_minus_p);
  for (int x = 0; x < n; ++x) {
    log_d += std::log(md.lambda(x)) - md.lambda(x) * rho(x);
    for (int y = 0; y < n; ++y) {
      if (k(x, y) == 0) continue;
      log_d += k(x, y) * std::log(std::sqrt(rho(x)) * md.C(x, y) * std::sqrt(rho(y)));
      log_d -= std::lgamma(k(x, y) + 1.0);
    }
  }
  return std::exp(log_d);
}

double log_pmf_even(const MarkovData& md, const Eigen::MatrixXi& ksym) {
  if (!is_even_network(ksym))
    throw std::invalid_argument("network is not even");
  const int n = static_cast<int>(ksym.rows());
  double log_p = 0.5 * std::log(md.det_i_minus_p);
  for (int x = 0; x < n; ++x) {
    const int kx = ksym.row(x).sum() / 2;
    log_p += std::lgamma(2.0 * kx + 1.0) - kx * std::log(2.0) -
             std::lgamma(kx + 1.0);
    for (int y = x + 1; y < n; ++y) {
      if (ksym(x, y) == 0) continue;
      if (md.P(x, y) <= 0)
        throw std::invalid_argument("network charges a non-edge");
      log_p -= std::lgamma(ksym(x, y) + 1.0);
      log_p += ksym(x, y) * 0.5 * (std::log(md.P(x, y)) + std::log(md.P(y, x)));
    }
  }
  return log_p;
}

double pmf_even(const MarkovData& md, const Eigen::MatrixXi& ksym) {
  return std::exp(log_pmf_even(md, ksym));
}

double joint_density_even(const MarkovData& md, const Eigen::MatrixXi& ksym,
                          const Eigen::VectorXd& rho) {
  if (!is_even_network(ksym))
    throw std::invalid_argument("network is not even");
  const int n = static_cast<int>(ksym.rows());
  double log_d = 0.5 * std::log(md.det_i_minus_p);
  for (int x = 0; x < n; ++x) {
    if (rho(x) <= 0) throw std::invalid_argument("rho must be > 0");
    log_d += 0.5 * (std::log(md.lambda(x)) - std::log(std::numbers::pi * rho(x))) -
             md.lambda(x) * rho(x);
    for (int y = x + 1; y < n; ++y) {
      if (ksym(x, y) == 0) continue;
      log_d += ksym(x, y) *
               std::log(2.0 * std::sqrt(rho(x) * rho(y)) * md.C(x, y));
      log_d -= std::lgamma(ksym(x, y) + 1.0);
    }
  }
  return std::exp(log_d);
}

Eigen::MatrixXi homology_class(const Eigen::MatrixXi& k) {
  return k - Eigen::MatrixXi(k.transpose());
}

Eigen::VectorXi r_field(const Eigen::MatrixXi& k) {
  const int n = static_cast<int>(k.rows());
  Eigen::VectorXi r(n);
  for (int x = 0; x < n; ++x) {
    const long total = k.row(x).sum();
    long sq = 0;
    for (int y = 0; y < n; ++y) sq += static_cast<long>(k(x, y)) * k(x, y);
    r(x) = static_cast<int>(total * total - sq);
  }
  return r;
}

namespace {

// Oriented edge list in row-major (x, y) order; gives the lexicographic
// enumeration order used by all exhaustive tests.
std::vector<std::pair<int, int>> oriented_edges(const WeightedGraph& g) {
  std::vector<std::pair<int, int>> out;
  const int n = g.num_vertices();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && g.has_edge(x, y)) out.push_back({x, y});
  return out;
}

void enumerate_counts(const std::vector<std::pair<int, int>>& slots,
                      int max_total, std::size_t pos, int used,
                      Eigen::MatrixXi& k,
                      const std::function<void(const Eigen::MatrixXi&)>& emit) {
  if (pos == slots.size()) {
    emit(k);
    return;
  }
  auto [x, y] = slots[pos];
  for (int c = 0; c + used <= max_total; ++c) {
    k(x, y) = c;
    enumerate_counts(slots, max_total, pos + 1, used + c, k, emit);
  }
  k(x, y) = 0;
}

}  // namespace

std::vector<Eigen::MatrixXi> enumerate_eulerian_networks(const WeightedGraph& g,
                                                         int max_total) {
  const int n = g.num_vertices();
  std::vector<Eigen::MatrixXi> out;
  Eigen::MatrixXi k = Eigen::MatrixXi::Zero(n, n);
  enumerate_counts(oriented_edges(g), max_total, 0, 0, k,
                   [&](const Eigen::MatrixXi& cand) {
                     if (is_eulerian(cand)) out.push_back(cand);
                   });
  return out;
}

std::vector<Eigen::MatrixXi> enumerate_even_networks(const WeightedGraph& g,
                                                     int max_total) {
  const int n = g.num_vertices();
  std::vector<std::pair<int, int>> slots;
  for (const Edge& e : g.edges())
    slots.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(slots.begin(), slots.end());
  std::vector<Eigen::MatrixXi> out;
  Eigen::MatrixXi half = Eigen::MatrixXi::Zero(n, n);
  enumerate_counts(slots, max_total, 0, 0, half,
                   [&](const Eigen::MatrixXi& cand) {
                     Eigen::MatrixXi sym = cand + Eigen::MatrixXi(cand.transpose());
                     if (is_even_network(sym)) out.push_back(sym);
                   });
  return out;
}

QuasiInvarianceResult quasi_invariance_check(
    const WeightedGraph& g, const MarkovData& md, const Eigen::MatrixXi& k,
    const std::function<double(const Eigen::MatrixXi&)>& f, int samples,
    std::uint64_t seed) {
  if (!is_eulerian(k)) throw std::invalid_argument("k must be Eulerian");
  const int n = g.num_vertices();
  SoupSampler sampler(g, md, 1.0, default_k_max(md));
  RngEngine rng = make_rng(seed);

  double lhs_sum = 0, lhs_sq = 0, rhs_sum = 0, rhs_sq = 0;
  for (int s = 0; s < samples; ++s) {
    Eigen::MatrixXi net = sampler.sample_network(rng);
    const double lhs = f(net + k);
    lhs_sum += lhs;
    lhs_sq += lhs * lhs;

    double rhs = 0;
    if (((net - k).array() >= 0).all()) {
      double log_w = 0;
      for (int x = 0; x < n; ++x) {
        const int nx = net.row(x).sum();
        const int kx = k.row(x).sum();
        log_w += std::lgamma(nx - kx + 1.0) - std::lgamma(nx + 1.0);
        for (int y = 0; y < n; ++y) {
          if (k(x, y) == 0) continue;
          log_w += std::lgamma(net(x, y) + 1.0) -
                   std::lgamma(net(x, y) - k(x, y) + 1.0);
          log_w -= k(x, y) * std::log(md.P(x, y));
        }
      }
      rhs = f(net) * std::exp(log_w);
    }
    rhs_sum += rhs;
    rhs_sq += rhs * rhs;
  }
  QuasiInvarianceResult res;
  res.lhs = lhs_sum / samples;
  res.rhs = rhs_sum / samples;
  res.lhs_se = std::sqrt(std::max(0.0, lhs_sq / samples - res.lhs * res.lhs) /
                         samples);
  res.rhs_se = std::sqrt(std::max(0.0, rhs_sq / samples - res.rhs * res.rhs) /
                         samples);
  return res;
}

}  // namespace loopnets
