#pragma once

// Gauss rules from the Golub-Welsch eigenproblem. Floating point only; used
// by the numeric oracles, never by the exact engine.

#include <vector>

namespace supercalc {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights on [-1, 1] with weight 1.
QuadratureRule gauss_legendre(int count);
/// Nodes and weights on R with weight exp(-t^2).
QuadratureRule gauss_hermite(int count);
/// Gauss-Legendre mapped to [a, b].
QuadratureRule gauss_legendre(int count, double a, double b);

}  // namespace supercalc
