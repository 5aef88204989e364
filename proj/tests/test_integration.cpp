#include <cmath>

#include "support.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/harmonics.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/operators.hpp"
#include "supercalc/verify/numeric.hpp"
#include "supercalc/verify/random.hpp"

using namespace supercalc;
using test::C;
using test::P;
using test::Q;

namespace {

Scalar pi() { return Scalar::pi_power(2); }

double monomial_value(const std::vector<int>& alpha, const std::vector<double>& x) {
  double v = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) v *= std::pow(x[i], alpha[i]);
  return v;
}

}  // namespace

TEST_SUITE("integration") {
  TEST_CASE("Berezin integral") {
    const SpaceSignature s1{2, 1, false}, s2{2, 2, false};
    CHECK(berezin(P("q1*q2", s1)) == C(s1, Scalar::pi_power(-2)));
    CHECK(berezin(P("q1*q2*q3*q4", s2)) == C(s2, Scalar::pi_power(-4)));
    CHECK(berezin(P("q1 + x1*q2", s1)).is_zero());
    CHECK(berezin(P("x1*q1*q2*e1", s1)) == P("x1*e1", s1) * Scalar::pi_power(-2));
  }

  TEST_CASE("Berezin of x`^{2k} R against the fermionic Laplacian") {
    // berezin(x`^{2k} R) = k! (-1)^{n-k} / (pi^n 4^{n-k} (n-k)!) Delta_f^{n-k} R for R of degree 2n-2k
    for (int n = 1; n <= 3; ++n) {
      const SpaceSignature s{1, n, false};
      verify::ElementGenerator gen(s, 61);
      for (int k = 0; k <= n; ++k) {
        verify::RandomOptions opt;
        opt.fermionic_only = true;
        opt.homogeneous = true;
        opt.max_degree = 2 * n - 2 * k;
        for (int t = 0; t < 5; ++t) {
          const Element r = gen.element(opt).homogeneous_part(2 * n - 2 * k);
          Element lf = r;
          for (int j = 0; j < n - k; ++j) lf = laplace_fermionic(lf);
          const Rational c = factorial(k) * ((n - k) % 2 == 0 ? 1 : -1) / (rational_pow(Q(4), n - k) * factorial(n - k));
          CHECK(berezin(mul(power(fermionic_square(s), k), r)) == lf * (Scalar(c) * Scalar::pi_power(-2 * n)));
        }
      }
    }
    const SpaceSignature s{1, 2, false};
    CHECK(berezin(mul(fermionic_square(s), P("q1*q2", s))) == C(s, Scalar::pi_power(-4)));
  }

  TEST_CASE("Berezin pairing is nondegenerate") {
    for (int n = 1; n <= 3; ++n) {
      const SpaceSignature s{1, n, false};
      const int top = 1 << (2 * n);
      for (int a = 0; a < top; ++a) {
        SuperMonomial ma;
        ma.ferm = static_cast<std::uint16_t>(a);
        int partners = 0;
        for (int b = 0; b < top; ++b) {
          SuperMonomial mb;
          mb.ferm = static_cast<std::uint16_t>(b);
          partners += !berezin(mul(Element::monomial(s, ma), Element::monomial(s, mb))).is_zero();
        }
        CHECK(partners == 1);
      }
    }
  }

  TEST_CASE("sphere, ball and Gaussian moments") {
    CHECK(sphere_moment({0, 0, 0}, 3) == Scalar(4) * pi());
    CHECK(sphere_moment({2, 0, 0}, 3) == Scalar(Q(4, 3)) * pi());
    CHECK(sphere_moment({1, 0}, 2).is_zero());
    CHECK(ball_moment({0, 0}, 2, Q(1)) == pi());
    CHECK(ball_moment({2, 0, 0}, 3, Q(1)) == Scalar(Q(4, 15)) * pi());
    CHECK(ball_moment({1, 1}, 2, Q(1)).is_zero());
    for (int m = 2; m <= 4; ++m) {
      for (const std::vector<int>& alpha : {std::vector<int>{0, 0, 0, 0}, {2, 0, 0, 0}, {4, 2, 0, 0}, {2, 2, 2, 2}, {6, 0, 2, 0}, {1, 2, 0, 0}}) {
        const std::vector<int> a(alpha.begin(), alpha.begin() + m);
        const double numeric = verify::sphere_integral([&](const std::vector<double>& x) { return monomial_value(a, x); }, m, 32, 0);
        CHECK(sphere_moment(a, m).to_complex().real() == doctest::Approx(numeric).epsilon(1e-11));
        double gauss = 1;
        for (int ai : a) gauss *= ai % 2 == 0 ? std::tgamma((ai + 1) / 2.0) : 0.0;
        CHECK(gaussian_moment(a, m).to_complex().real() == doctest::Approx(gauss).epsilon(1e-13));
        int deg = 0;
        for (int ai : a) deg += ai;
        CHECK(ball_moment(a, m, Q(3, 2)) == sphere_moment(a, m) * Scalar(rational_pow(Q(3, 2), m + deg) / (m + deg)));
      }
    }
  }

  TEST_CASE("supersphere values") {
    const SpaceSignature s31{3, 1, false}, s30{3, 0, false}, s22{2, 2, false};
    CHECK(pizzetti_supersphere(C(s31, 1)) == C(s31, 2));
    CHECK(pizzetti_supersphere(C(s30, 1)) == C(s30, Scalar(4) * pi()));
    CHECK(pizzetti_supersphere(C(s22, 1)).is_zero());
    CHECK(pizzetti_supersphere(P("q1*q2", s31)) == C(s31, 4));
    CHECK(supersphere_closed(C(s31, 1), Q(1)) == C(s31, 2));
    CHECK(supersphere_closed(P("q1*q2", s31), Q(1)) == C(s31, 4));
    CHECK(supersphere_closed(P("x1^2", s30), Q(1)) == C(s30, Scalar(Q(4, 3)) * pi()));
    CHECK(supersphere_radius(C(s30, 1), Q(2)) == C(s30, Scalar(16) * pi()));
    CHECK(supersphere_radius(C(s31, 1), Q(2)) == C(s31, 2));
    CHECK(phi_k(C(s31, 1), 1) == C(s31, 4));
    CHECK(phi_k(P("q1*q2", s31), 1).is_zero());
    // Clifford words pass through
    CHECK(pizzetti_supersphere(P("e1*w2", s31)) == P("2*e1*w2", s31));
  }

  TEST_CASE("Pizzetti series against iterated Laplacians and the closed form") {
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 1, false}, SpaceSignature{2, 2, false}, SpaceSignature{3, 2, false}}) {
      verify::ElementGenerator gen(s, 67);
      const auto opt = verify::scalar_polynomials(5);
      for (int t = 0; t < 20; ++t) {
        const Element f = gen.element(opt);
        const Element a = pizzetti_supersphere(f);
        CHECK(a == pizzetti_by_laplacian(f));
        CHECK(a == supersphere_closed(f, Q(1)));
        CHECK(supersphere_radius(f, Q(1)) == a);
      }
    }
  }

  TEST_CASE("superball") {
    const SpaceSignature s20{2, 0, false}, s31{3, 1, false};
    CHECK(superball(C(s20, 1)) == C(s20, pi()));
    for (const SpaceSignature s : {s31, SpaceSignature{2, 1, false}, SpaceSignature{2, 2, false}, SpaceSignature{4, 3, false}}) {
      for (int k = 0; k <= 6; ++k) {
        for (const auto& mono : monomial_basis(k, s)) {
          const Element f = Element::monomial(s, mono);
          CHECK(superball_series(f) == superball_geometric(f));
        }
      }
    }
  }

  TEST_CASE("Gaussian integral") {
    const SpaceSignature s31{3, 1, false};
    CHECK(gaussian_integral(C(s31, 1)) == C(s31, Scalar::pi_power(1)));
    CHECK(gaussian_integral(P("x1 + x1*x2*x3 + x2*q1*q2", s31)).is_zero());
    for (const SpaceSignature s : {s31, SpaceSignature{2, 1, false}, SpaceSignature{4, 1, false}, SpaceSignature{2, 2, false}}) {
      verify::ElementGenerator gen(s, 71);
      const auto opt = verify::scalar_polynomials(6);
      for (int t = 0; t < 10; ++t) {
        const Element f = gen.element(opt);
        CHECK(gaussian_integral(f) == gaussian_merged(f));
      }
    }
  }

  TEST_CASE("Cauchy formulas") {
    const SpaceSignature s2{2, 2, false};
    CHECK(fermionic_cauchy_check(P("q1", s2), P("q2*q3", s2), P("q4", s2)));
    CHECK(fermionic_cauchy_check(C(s2, 1), C(s2, 1), P("q1", s2)));
    const SpaceSignature s1{2, 1, false};
    CHECK(superball_cauchy_check(C(s1, 1), C(s1, 1)));
    CHECK(superball_cauchy_check(C(s1, 1), vector_x(s1)));
    CHECK(box_cauchy_check(C(s1, 1), C(s1, 1), Element(s1)));
    CHECK(box_cauchy_check(C(s1, 1), C(s1, 1), P("q1*q2", s1)));
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 2, false}, SpaceSignature{3, 0, false}}) {
      verify::ElementGenerator gen(s, 73);
      verify::RandomOptions opt;
      opt.max_degree = 3;
      opt.max_terms = 5;
      verify::RandomOptions grass;
      grass.fermionic_only = true;
      grass.max_degree = 2;
      grass.max_terms = 3;
      for (int t = 0; t < 10; ++t) {
        const Element f = gen.element(opt), g = gen.element(opt);
        if (s.n > 0) CHECK(fermionic_cauchy_check(f, g, gen.element(grass)));
        CHECK(superball_cauchy_check(f, g));
        CHECK(box_cauchy_check(f, g, s.n > 0 ? gen.element(grass) : Element(s)));
      }
    }
  }

  TEST_CASE("split into bosonic monomials") {
    const SpaceSignature s{2, 1, false};
    const auto parts = split_bosonic(P("x1^2*q1 + x1^2*e2 + 3", s));
    CHECK(parts.size() == 2);
    CHECK(parts.at({2, 0}) == P("q1 + e2", s));
    CHECK(parts.at({0, 0}) == C(s, 3));
  }
}
