#include "loopnets/loop_soup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace loopnets {

DiscreteLoop canonical_loop(const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 2) throw std::invalid_argument("discrete loop needs length >= 2");
  std::vector<int> best = cycle;
  std::vector<int> rot(k);
  for (std::size_t s = 1; s < k; ++s) {
    for (std::size_t i = 0; i < k; ++i) rot[i] = cycle[(s + i) % k];
    if (rot < best) best = rot;
  }
  DiscreteLoop loop;
  loop.vertices = std::move(best);
  loop.multiplicity = 1;
  for (std::size_t j = 2; j <= k; ++j) {
    if (k % j != 0) continue;
    const std::size_t period = k / j;
    bool repeat = true;
    for (std::size_t i = period; i < k && repeat; ++i)
      repeat = loop.vertices[i] == loop.vertices[i - period];
    if (repeat) loop.multiplicity = static_cast<int>(j);
  }
  return loop;
}

int BasedLoop::base_visits() const {
  return static_cast<int>(std::count(path.begin(), path.end(), base));
}

std::vector<std::vector<int>> BasedLoop::excursions() const {
  std::vector<std::vector<int>> out;
  for (int v : path) {
    if (v == base) out.emplace_back();
    out.back().push_back(v);
  }
  return out;
}

LoopMasses loop_length_masses(const MarkovData& md, int k_max) {
  if (k_max < 2) throw std::invalid_argument("k_max must be >= 2");
  LoopMasses lm;
  lm.k_max = k_max;
  lm.mass.assign(k_max + 1, 0.0);
  Eigen::MatrixXd pk = md.P;  // P^1; trace is zero, no length-1 loops
  for (int k = 2; k <= k_max; ++k) {
    pk = pk * md.P;
    lm.mass[k] = pk.trace() / k;
    lm.total += lm.mass[k];
  }
  const double r = md.spectral_radius;
  const int n = static_cast<int>(md.P.rows());
  // sum_{k > K} |X| r^k / k <= |X| r^{K+1} / ((K+1)(1-r))
  lm.tail_bound = r >= 1.0 ? std::numeric_limits<double>::infinity()
                           : n * std::pow(r, k_max + 1) / ((k_max + 1) * (1.0 - r));
  return lm;
}

int default_k_max(const MarkovData& md, double tail_eps) {
  const double r = md.spectral_radius;
  const int n = static_cast<int>(md.P.rows());
  if (r <= 0) return 2;
  for (int k = 2; k <= 100000; ++k) {
    const double bound = n * std::pow(r, k + 1) / ((k + 1) * (1.0 - r));
    if (bound < tail_eps) return k;
  }
  return 100000;
}

SoupSampler::SoupSampler(const WeightedGraph& g, const MarkovData& md,
                         double alpha, int k_max)
    : g_(g), md_(md), alpha_(alpha) {
  if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
  masses_ = loop_length_masses(md, k_max);
  const int n = g.num_vertices();
  powers_.resize(k_max + 1);
  powers_[0] = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= k_max; ++k) powers_[k] = powers_[k - 1] * md.P;

  length_cdf_.assign(k_max + 1, 0.0);
  start_cdf_.assign(k_max + 1, {});
  double acc = 0;
  for (int k = 2; k <= k_max; ++k) {
    acc += masses_.mass[k];
    length_cdf_[k] = acc;
    auto& cdf = start_cdf_[k];
    cdf.assign(n, 0.0);
    double sacc = 0;
    for (int x = 0; x < n; ++x) {
      sacc += powers_[k](x, x);
      cdf[x] = sacc;
    }
  }
}

std::vector<int> SoupSampler::sample_based_loop(int k, RngEngine& rng) const {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const auto& scdf = start_cdf_[k];
  const double u = unif(rng) * scdf.back();
  int x0 = static_cast<int>(std::lower_bound(scdf.begin(), scdf.end(), u) -
                            scdf.begin());
  std::vector<int> path;
  path.reserve(k);
  path.push_back(x0);
  int cur = x0;
  for (int t = 1; t < k; ++t) {
    // bridge step: P(v) ~ P(cur,v) (P^{k-t-1})(v,x0)
    const int rem = k - t;
    const auto& nbrs = g_.neighbors(cur);
    double total = 0;
    for (int v : nbrs) total += md_.P(cur, v) * powers_[rem - 1](v, x0);
    double r = unif(rng) * total;
    int next = nbrs.back();
    for (int v : nbrs) {
      r -= md_.P(cur, v) * powers_[rem - 1](v, x0);
      if (r <= 0) {
        next = v;
        break;
      }
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

LoopEnsemble SoupSampler::sample(std::uint64_t seed) const {
  LoopEnsemble ens;
  ens.alpha = alpha_;
  ens.seed = seed;
  ens.k_max = masses_.k_max;
  ens.tail_bound = masses_.tail_bound;
  RngEngine rng = make_rng(seed);
  if (alpha_ == 0 || masses_.total <= 0) return ens;
  std::poisson_distribution<int> pois(alpha_ * masses_.total);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int count = pois(rng);
  ens.loops.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double u = unif(rng) * masses_.total;
    int k = static_cast<int>(std::lower_bound(length_cdf_.begin() + 2,
                                              length_cdf_.end(), u) -
                             length_cdf_.begin());
    ens.loops.push_back(canonical_loop(sample_based_loop(k, rng)));
  }
  return ens;
}

Eigen::MatrixXi SoupSampler::sample_network(RngEngine& rng) const {
  const int n = g_.num_vertices();
  Eigen::MatrixXi net = Eigen::MatrixXi::Zero(n, n);
  if (alpha_ == 0 || masses_.total <= 0) return net;
  std::poisson_distribution<int> pois(alpha_ * masses_.total);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int count = pois(rng);
  for (int i = 0; i < count; ++i) {
    const double u = unif(rng) * masses_.total;
    int k = static_cast<int>(std::lower_bound(length_cdf_.begin() + 2,
                                              length_cdf_.end(), u) -
                             length_cdf_.begin());
    std::vector<int> path = sample_based_loop(k, rng);
    for (std::size_t t = 0; t < path.size(); ++t)
      net(path[t], path[(t + 1) % path.size()]) += 1;
  }
  return net;
}

LoopEnsemble sample_ensemble(const WeightedGraph& g, const MarkovData& md,
                             double alpha, int k_max, std::uint64_t seed) {
  return SoupSampler(g, md, alpha, k_max).sample(seed);
}

Eigen::MatrixXi edge_network(const LoopEnsemble& ens, int num_vertices) {
  Eigen::MatrixXi net = Eigen::MatrixXi::Zero(num_vertices, num_vertices);
  for (const DiscreteLoop& loop : ens.loops) {
    const auto& vs = loop.vertices;
    for (std::size_t t = 0; t < vs.size(); ++t)
      net(vs[t], vs[(t + 1) % vs.size()]) += 1;
  }
  return net;
}

Eigen::VectorXi network_totals(const Eigen::MatrixXi& net) {
  return net.rowwise().sum();
}

Eigen::VectorXd occupation_field(const MarkovData& md,
                                 const Eigen::VectorXi& totals, double alpha,
                                 RngEngine& rng) {
  if (alpha != 1.0 && alpha != 0.5)
    throw std::invalid_argument("occupation_field supports alpha in {1/2, 1}");
  const int n = static_cast<int>(totals.size());
  Eigen::VectorXd rho(n);
  const double shift = alpha == 1.0 ? 1.0 : 0.5;
  for (int x = 0; x < n; ++x) {
    std::gamma_distribution<double> gamma(totals(x) + shift, 1.0 / md.lambda(x));
    rho(x) = gamma(rng);
  }
  return rho;
}

WilsonSample wilson_sample(const WeightedGraph& g, const MarkovData& md,
                           const std::vector<int>& order, std::uint64_t seed) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order must be a permutation of the vertices");
  WilsonSample ws;
  ws.exits.dest.assign(n, {});
  std::vector<char> forbidden(n, 0);
  RngEngine rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  for (int base : order) {
    BasedLoop loop;
    loop.base = base;
    std::vector<std::pair<int, int>> pending;  // steps of the running excursion
    int cur = base;
    bool absorbed = false;
    while (!absorbed) {
      // one chain step from cur: neighbor v w.p. P(cur,v), death otherwise
      double r = unif(rng);
      int next = -1;
      for (int v : g.neighbors(cur)) {
        r -= md.P(cur, v);
        if (r <= 0) {
          next = v;
          break;
        }
      }
      if (next < 0 || forbidden[next]) {
        // killed (or swallowed by an earlier vertex): drop the partial excursion
        absorbed = true;
      } else if (next == base) {
        // excursion completed: commit its steps (consumption order per vertex)
        pending.push_back({cur, next});
        for (auto [u, v] : pending) {
          ws.exits.dest[u].push_back(v);
          loop.path.push_back(u);
        }
        pending.clear();
        cur = base;
      } else {
        pending.push_back({cur, next});
        cur = next;
      }
    }
    if (!loop.path.empty()) ws.loops.push_back(std::move(loop));
    forbidden[base] = 1;
  }
  return ws;
}

std::vector<BasedLoop> loops_from_exit_configuration(
    const ExitConfiguration& exits, const std::vector<int>& order) {
  std::vector<std::size_t> used(exits.dest.size(), 0);
  std::vector<BasedLoop> loops;
  for (int base : order) {
    if (used[base] >= exits.dest[base].size()) continue;
    BasedLoop loop;
    loop.base = base;
    int cur = base;
    do {
      loop.path.push_back(cur);
      if (used[cur] >= exits.dest[cur].size())
        throw std::invalid_argument("exit configuration does not close a loop");
      cur = exits.dest[cur][used[cur]++];
    } while (cur != base || used[base] < exits.dest[base].size());
    loops.push_back(std::move(loop));
  }
  return loops;
}

std::vector<DiscreteLoop> eppf_split(const BasedLoop& loop, RngEngine& rng) {
  const auto exc = loop.excursions();
  const int n = static_cast<int>(exc.size());
  if (n == 0) return {};
  // Chinese restaurant with theta = 1: excursion i joins a block of size m
  // with weight m, starts a new block with weight 1.
  std::vector<std::vector<int>> blocks;  // excursion indices per block
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    const double u = unif(rng) * (i + 1);
    if (u < 1.0 || blocks.empty()) {
      blocks.push_back({i});
      continue;
    }
    double acc = 1.0;
    bool placed = false;
    for (auto& block : blocks) {
      acc += static_cast<double>(block.size());
      if (u < acc) {
        block.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) blocks.back().push_back(i);  // rounding guard
  }
  std::vector<DiscreteLoop> out;
  for (const auto& block : blocks) {
    std::vector<int> cycle;
    for (int i : block) cycle.insert(cycle.end(), exc[i].begin(), exc[i].end());
    out.push_back(canonical_loop(cycle));
  }
  return out;
}

}  // namespace loopnets
