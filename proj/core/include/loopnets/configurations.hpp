#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <vector>

#include "loopnets/graph.hpp"
#include "loopnets/rng.hpp"

namespace loopnets {

/// Coupling of numbered half-edges: at each vertex x there are c_x numbered
/// exiting and c_x numbered entering half-edges; exit slot i at x couples to
/// an entering slot at a neighbor, forming an oriented edge of the graph.
struct Configuration {
  // exit_to[x][i] = (y, j): exit slot i at x -> enter slot j at y (0-based)
  std::vector<std::vector<std::pair<int, int>>> exit_to;

  int num_vertices() const { return static_cast<int>(exit_to.size()); }
  std::vector<int> degrees() const;       // c_x
  Eigen::MatrixXi network() const;        // induced Eulerian network
  int total_jumps() const;                // N(c) = sum c~_{x,y}
  // enter_from[y][j] = (x, i), inverse of the coupling
  std::vector<std::vector<std::pair<int, int>>> enter_from() const;
  bool valid(const WeightedGraph& g) const;
  bool operator==(const Configuration&) const = default;

  /// Simultaneous cyclic shift of entering and exiting slots at each vertex.
  Configuration shifted(const std::vector<int>& shifts) const;
};

/// Q(c) = det(I-P) prod P^{c~} / prod_x c_x!.
double q_probability(const MarkovData& md, const Configuration& c);

/// Number of configurations over a network: prod_x (k_x!)^2 / prod k_{x,y}!.
double multiplicity(const Eigen::MatrixXi& k);

/// Uniform configuration over the preimage of the network k.
Configuration uniform_preimage(const WeightedGraph& g, const Eigen::MatrixXi& k,
                               RngEngine& rng);

/// Q-distributed configuration: N^{(1)} network, then a uniform preimage.
Configuration sample_configuration(const WeightedGraph& g, const MarkovData& md,
                                   std::uint64_t seed, int k_max = 0);

/// All configurations with total jump count <= max_total (guarded small).
std::vector<Configuration> enumerate_configurations(const WeightedGraph& g,
                                                    int max_total);

/// Even configurations: 2c_x numbered incident slots per vertex, paired
/// across edges of the graph.
struct EvenConfiguration {
  // pair_of[x][s] = (y, t): slot s at x pairs with slot t at y
  std::vector<std::vector<std::pair<int, int>>> pair_of;

  int num_vertices() const { return static_cast<int>(pair_of.size()); }
  std::vector<int> degrees() const;  // c_x (half the slot count)
  Eigen::MatrixXi network() const;   // even network (symmetric counts)
  bool valid(const WeightedGraph& g) const;
  bool operator==(const EvenConfiguration&) const = default;
};

/// Q^ev(c) = sqrt(det(I-P)) prod P^c / prod_x 2^{c_x} c_x!.
double q_even_probability(const MarkovData& md, const EvenConfiguration& c);

/// prod_x (2k_x)! / prod_edges k_{{x,y}}!.
double even_multiplicity(const Eigen::MatrixXi& ksym);

EvenConfiguration uniform_even_preimage(const WeightedGraph& g,
                                        const Eigen::MatrixXi& ksym,
                                        RngEngine& rng);

EvenConfiguration sample_even_configuration(const WeightedGraph& g,
                                            const MarkovData& md,
                                            std::uint64_t seed, int k_max = 0);

std::vector<EvenConfiguration> enumerate_even_configurations(
    const WeightedGraph& g, int max_total);

/// Exact rational arithmetic for the generating-function checks.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational&) const = default;
};

/// Coefficient tables indexed by per-vertex degree exponents.
using SeriesTable = std::map<std::vector<int>, Rational>;

struct GeneratingCheck {
  SeriesTable series;       // Taylor coefficients of the determinant side
  SeriesTable enumeration;  // sum over configurations of prod s^c / prod c!
  bool exact_match = false;
};

/// Corollary check: coefficients of 1 / det(I - M_s A) against the
/// exponential generating function of configuration counts by degree.
GeneratingCheck config_generating_check(const WeightedGraph& g,
                                        int total_degree_cap);

/// Even analogue: det(I - 2 M_s A)^{-1/2} against even-configuration counts.
GeneratingCheck even_generating_check(const WeightedGraph& g,
                                      int total_degree_cap);

}  // namespace loopnets
