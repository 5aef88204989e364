#include "supercalc/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace supercalc {

namespace {

// Symmetric Jacobi matrix with zero diagonal and off-diagonal b_k;
// mu0 is the total mass of the weight.
QuadratureRule golub_welsch(int count, double mu0, double (*offdiag)(int)) {
  if (count < 1) throw std::invalid_argument("quadrature needs at least one node");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) {
    j(k - 1, k) = offdiag(k);
    j(k, k - 1) = offdiag(k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(j);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Jacobi eigenproblem failed");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(count));
  rule.weights.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int count) {
  return golub_welsch(count, 2.0, [](int k) {
    const double kk = k;
    return kk / std::sqrt(4.0 * kk * kk - 1.0);
  });
}

QuadratureRule gauss_hermite(int count) {
  return golub_welsch(count, std::sqrt(std::numbers::pi), [](int k) { return std::sqrt(k / 2.0); });
}

QuadratureRule gauss_legendre(int count, double a, double b) {
  QuadratureRule rule = gauss_legendre(count);
  const double half = (b - a) / 2.0, mid = (a + b) / 2.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

}  // namespace supercalc
