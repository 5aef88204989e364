#pragma once

// Super Fourier transform on polynomial times Gaussian functions, and the
// Radon transform computed through Fourier (exact) or directly from the
// hyperplane delta expansion (numeric bosonic part).

#include <complex>
#include <map>
#include <vector>

#include "supercalc/superalgebra.hpp"

namespace supercalc {

/// poly * exp(-bos_rate |x_b|^2) * exp(ferm_rate x`^2).
struct GaussianClassFunction {
  Element poly;
  Rational bos_rate{1};
  Rational ferm_rate{0};

  const SpaceSignature& space() const { return poly.space(); }
};

/// P exp(x^2).
GaussianClassFunction times_exp_x_squared(const Element& p);

/// exp(a) for a nilpotent even element (finite series).
Element nilpotent_exp(const Element& a);
/// poly * exp(ferm_rate x`^2) expanded.
Element fermionic_part(const GaussianClassFunction& f);

enum class FourierSign { Plus, Minus };

/// Integral of exp(-+ i<x,y>) f(x) over R^{m|2n}, no normalizing constant.
/// The result is written in the same space with x_i, x`_j standing for
/// y_i, y`_j. bos_rate must be the square of a rational.
GaussianClassFunction super_fourier(const GaussianClassFunction& f, FourierSign sign);

/// R(f)(y, p) = sum_k p^k poly_p[k] * exp(-gauss_rate p^2), with y_b fixed
/// and y` written as x` of the original space.
struct RadonValue {
  SpaceSignature space{};
  std::vector<Rational> y_bos;
  std::map<int, Element> poly_p;
  Rational gauss_rate;

  /// Per output channel (y` monomial and generator word).
  std::map<SuperMonomial, std::complex<double>> evaluate(double p) const;
};

/// (2pi)^{-1} * integral dr exp(ipr) F^-(f)(r y). |y_b|^2 / (4 bos_rate) must
/// be a rational square.
RadonValue radon_fourier(const GaussianClassFunction& f, const std::vector<Rational>& y_bos);

struct RadonQuadSpec {
  int nodes = 20;         // Gauss-Hermite nodes per hyperplane direction
  int refine = 8;         // extra nodes for the error estimate
  double tolerance = 1e-9;
};

struct NumericChannels {
  std::map<SuperMonomial, std::complex<double>> values;
  double error = 0.0;
};

/// Berezin part exact through the hyperplane delta expansion, hyperplane
/// integrals by tensor Gauss-Hermite quadrature.
NumericChannels radon_direct_numeric(const GaussianClassFunction& f, const std::vector<Rational>& y_bos,
                                     const Rational& p, const RadonQuadSpec& spec = {});

/// Largest channel difference divided by max(1, largest channel size).
double relative_disagreement(const std::map<SuperMonomial, std::complex<double>>& a,
                             const std::map<SuperMonomial, std::complex<double>>& b);

}  // namespace supercalc
