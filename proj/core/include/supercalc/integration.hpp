#pragma once

// Exact integrals. Clifford-valued integrands are integrated coefficient-wise;
// generator words (and y` variables of a doubled space) pass through.
// Results are Elements without x or x` variables.

#include <map>
#include <vector>

#include "supercalc/superalgebra.hpp"

namespace supercalc {

using IntegralValue = Element;

/// pi^{-n} d/dx`_{2n} ... d/dx`_1.
Element berezin(const Element& f);

/// Integral of xi^alpha over the unit sphere S^{m-1}; alpha padded with zeros.
Scalar sphere_moment(const std::vector<int>& alpha, int m);
/// Integral of x^alpha over the ball of radius R in R^m.
Scalar ball_moment(const std::vector<int>& alpha, int m, const Rational& radius);
/// Integral of x^alpha exp(-|x|^2) over R^m.
Scalar gaussian_moment(const std::vector<int>& alpha, int m);

/// Iterated-Laplacian series over the unit supersphere.
IntegralValue pizzetti_supersphere(const Element& f);
/// Same series evaluated with repeated application of the Laplace operator.
/// Slow; kept as an independent reference.
IntegralValue pizzetti_by_laplacian(const Element& f);

/// Closed form over the supersphere of radius R, built from bosonic sphere
/// moments and Berezin integrals of x`^{2j}/j! f.
IntegralValue supersphere_closed(const Element& f, const Rational& radius);

IntegralValue superball_series(const Element& f);
IntegralValue superball_geometric(const Element& f);
/// Both forms; throws InternalInconsistency if they differ.
IntegralValue superball(const Element& f);

/// Closed form at radius R cross-checked against R^{M-1} times the unit
/// integral of f(Rx).
IntegralValue supersphere_radius(const Element& f, const Rational& radius);

/// Integral of f exp(x^2) over R^{m|2n}.
IntegralValue gaussian_integral(const Element& f);
/// Pole-free series sum_k (-1)^k pi^{M/2} / (4^k k!) (Delta^k f_{2k})(0).
IntegralValue gaussian_merged(const Element& f);

/// Supersphere integral of x`^{2k} f.
IntegralValue phi_k(const Element& f, int k);

/// Supersphere profile of f(Rx) for f = P exp(x^2): the map k -> c_k with
/// profile(R) = exp(-R^2) sum_k c_k R^k.
std::map<int, Element> radial_profile(const Element& p);
/// Integral over R > 0 of R^{M-1} profile(R); requires M + k > 0 for all k.
IntegralValue radial_integral(const Element& p);

/// Bosonic moment integral combined with Berezin over the unit sphere or ball.
IntegralValue sphere_berezin(const Element& f);
IntegralValue ball_berezin(const Element& f);

bool fermionic_cauchy_check(const Element& f, const Element& g, const Element& alpha);
bool superball_cauchy_check(const Element& f, const Element& g);
bool box_cauchy_check(const Element& f, const Element& g, const Element& beta);

/// Split f = sum_alpha x^alpha F_alpha with F_alpha free of bosonic variables.
std::map<std::vector<int>, Element> split_bosonic(const Element& f);

}  // namespace supercalc
