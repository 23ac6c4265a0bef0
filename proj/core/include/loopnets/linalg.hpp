#pragma once

#include <Eigen/Dense>
#include <complex>

#include "loopnets/graph.hpp"

namespace loopnets {

/// Matrix permanent by Ryser's inclusion-exclusion with Gray-code updates.
/// Guarded to n <= 15; matches the brute-force permutation sum.
double permanent(const Eigen::MatrixXd& m);

/// Lower-triangular factor L with L * L^T = a; throws if not PD.
Eigen::MatrixXd chol_factor(const Eigen::MatrixXd& a);

/// Antisymmetric real function on oriented edges, w(x,y) = -w(y,x).
class OneForm {
 public:
  explicit OneForm(int n) : w_(Eigen::MatrixXd::Zero(n, n)) {}
  explicit OneForm(const Eigen::MatrixXd& antisym);

  int size() const { return static_cast<int>(w_.rows()); }
  double operator()(int x, int y) const { return w_(x, y); }
  void set(int x, int y, double value);  // also sets w(y,x) = -value
  const Eigen::MatrixXd& matrix() const { return w_; }

  OneForm& operator+=(const OneForm& o);
  OneForm& operator*=(double s);

 private:
  Eigen::MatrixXd w_;
};

struct TwistedGreen {
  Eigen::MatrixXcd matrix;  // (M_lambda - C o e^{2 pi i w})^{-1}, Hermitian PD
  double det;               // det of the twisted energy form, real > 0
};

/// Green function of the energy form with conductances twisted by the
/// unit-modulus phases e^{2 pi i w(x,y)}.
TwistedGreen twist_green(const MarkovData& md, const OneForm& w);

/// det(M_lambda - C o e^{2 pi i w}); real positive for any real one-form.
double twisted_energy_det(const MarkovData& md, const OneForm& w);

/// Gauss-Laguerre nodes/weights for integrals of f(t) e^{-t} on (0, inf).
struct Quadrature {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
Quadrature gauss_laguerre(int n);

/// Deterministic pairwise summation (bit-stable reduction order).
double pairwise_sum(const std::vector<double>& xs);

}  // namespace loopnets
