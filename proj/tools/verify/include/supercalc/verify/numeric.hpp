#pragma once

// Floating-point oracle for supersphere integrals of non-polynomial
// superfunctions. Floats stay in this file; nothing here feeds a Scalar.

#include <functional>
#include <map>
#include <vector>

#include "supercalc/superalgebra.hpp"
#include "supercalc/transforms.hpp"

namespace supercalc::verify {

struct QuadSpec {
  int angular_nodes = 16;        // Gauss-Legendre nodes per polar angle
  int difference_levels = 5;     // Richardson levels for d/d(r^2)
  int monte_carlo_samples = 1 << 16;  // m > 4 only, antithetic pairs
  double tolerance = 1e-8;
};

using BosonicClosure = std::function<double(const std::vector<double>&)>;

/// f = sum_S x`_S w_S phi_S(x_b): one bosonic closure per Grassmann monomial
/// (with generator word) channel.
struct NumericSuperfunction {
  SpaceSignature space{};
  std::vector<std::pair<SuperMonomial, BosonicClosure>> channels;
};

struct NumericResult {
  std::map<SuperMonomial, double> values;  // keyed by output generator word
  double error = 0.0;
};

NumericSuperfunction channelize(const Element& poly);
/// Channels of P exp(-a|x_b|^2) exp(b x`^2).
NumericSuperfunction channelize(const GaussianClassFunction& f);

/// Integral of phi over the sphere of radius 1 in R^m.
double sphere_integral(const BosonicClosure& phi, int m, int angular_nodes, int mc_samples);

/// Supersphere integral of radius R from its closed form with numeric radial
/// derivatives in r^2 and product quadrature on S^{m-1}.
NumericResult numeric_supersphere(const NumericSuperfunction& f, double radius, const QuadSpec& quad = {});

}  // namespace supercalc::verify
