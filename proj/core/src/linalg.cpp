#include "loopnets/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace loopnets {

double permanent(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("permanent: square matrix required");
  if (n == 0) return 1.0;
  if (n > 15) throw std::invalid_argument("permanent: dimension > 15 not supported");

  // Ryser: Per(m) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} m(i,j).
  // Subsets visited in Gray-code order so each step updates one column.
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(n);
  double total = 0.0;
  unsigned long prev_gray = 0;
  const unsigned long count = 1ul << n;
  for (unsigned long k = 1; k < count; ++k) {
    const unsigned long gray = k ^ (k >> 1);
    const unsigned long diff = gray ^ prev_gray;
    const int j = std::countr_zero(diff);
    if (gray & diff)
      row_sums += m.col(j);
    else
      row_sums -= m.col(j);
    prev_gray = gray;
    const int bits = std::popcount(gray);
    const double prod = row_sums.prod();
    total += ((n - bits) % 2 == 0) ? prod : -prod;
  }
  return total;
}

Eigen::MatrixXd chol_factor(const Eigen::MatrixXd& a) {
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("chol_factor: matrix is not positive definite");
  return llt.matrixL();
}

OneForm::OneForm(const Eigen::MatrixXd& antisym) : w_(antisym) {
  if (w_.rows() != w_.cols())
    throw std::invalid_argument("one-form matrix must be square");
  if ((w_ + w_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("one-form matrix must be antisymmetric");
}

void OneForm::set(int x, int y, double value) {
  w_(x, y) = value;
  w_(y, x) = -value;
}

OneForm& OneForm::operator+=(const OneForm& o) {
  w_ += o.w_;
  return *this;
}

OneForm& OneForm::operator*=(double s) {
  w_ *= s;
  return *this;
}

static Eigen::MatrixXcd twisted_energy(const MarkovData& md, const OneForm& w) {
  const int n = static_cast<int>(md.lambda.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  for (int x = 0; x < n; ++x) {
    a(x, x) = md.lambda(x);
    for (int y = 0; y < n; ++y)
      if (md.C(x, y) != 0.0) a(x, y) -= md.C(x, y) * std::exp(two_pi_i * w(x, y));
  }
  return a;
}

TwistedGreen twist_green(const MarkovData& md, const OneForm& w) {
  Eigen::MatrixXcd a = twisted_energy(md, w);
  // |e^{2 pi i w}| = 1, so a is Hermitian and dominated by M_lambda - C: PD.
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(a);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("twisted energy form is singular");
  const int n = static_cast<int>(a.rows());
  TwistedGreen tg;
  tg.matrix = ldlt.solve(Eigen::MatrixXcd::Identity(n, n));
  Eigen::VectorXd d = ldlt.vectorD().real();
  if (d.minCoeff() <= 0)
    throw std::runtime_error("twisted energy form is not positive definite");
  tg.det = d.prod();
  return tg;
}

double twisted_energy_det(const MarkovData& md, const OneForm& w) {
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(twisted_energy(md, w));
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("twisted energy form is singular");
  Eigen::VectorXd d = ldlt.vectorD().real();
  if (d.minCoeff() <= 0)
    throw std::runtime_error("twisted energy form is not positive definite");
  return d.prod();
}

Quadrature gauss_laguerre(int n) {
  // Golub-Welsch on the Laguerre Jacobi matrix: a_k = 2k+1, b_k = k.
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    jac(k, k) = 2.0 * k + 1.0;
    if (k + 1 < n) {
      jac(k, k + 1) = k + 1.0;
      jac(k + 1, k) = k + 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  Quadrature q;
  q.nodes = es.eigenvalues();
  q.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    const double v0 = es.eigenvectors()(0, k);
    q.weights(k) = v0 * v0;  // total weight of e^{-t} dt is 1
  }
  return q;
}

double pairwise_sum(const std::vector<double>& xs) {
  // recursion keeps a fixed association order regardless of thread count
  std::function<double(size_t, size_t)> rec = [&](size_t lo, size_t hi) -> double {
    if (hi - lo <= 8) {
      double s = 0;
      for (size_t i = lo; i < hi; ++i) s += xs[i];
      return s;
    }
    const size_t mid = lo + (hi - lo) / 2;
    return rec(lo, mid) + rec(mid, hi);
  };
  return xs.empty() ? 0.0 : rec(0, xs.size());
}

}  // namespace loopnets
