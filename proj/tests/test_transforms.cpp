#include <cmath>
#include <complex>
#include <numbers>

#include "support.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/quadrature.hpp"
#include "supercalc/transforms.hpp"
#include "supercalc/verify/random.hpp"

using namespace supercalc;
using test::C;
using test::P;
using test::Q;

namespace {

// Value of a purely bosonic scalar-valued Element at a point.
std::complex<double> evaluate(const Element& e, const std::vector<double>& x) {
  std::complex<double> out = 0;
  for (const auto& [mono, c] : e.terms()) {
    double v = 1;
    for (std::size_t i = 0; i < x.size(); ++i) v *= std::pow(x[i], mono.bos[i]);
    out += c.to_complex() * v;
  }
  return out;
}

Scalar two_pi_power(int k) {
  Scalar out(1);
  for (int i = 0; i < std::abs(k); ++i) out = out * (k > 0 ? Scalar(2) * Scalar::pi_power(2) : Scalar(Q(1, 2)) * Scalar::pi_power(-2));
  return out;
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("quadrature rules") {
    const auto gl = gauss_legendre(8);
    for (int k = 0; k <= 15; ++k) {
      double sum = 0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) sum += gl.weights[i] * std::pow(gl.nodes[i], k);
      CHECK(sum == doctest::Approx(k % 2 == 0 ? 2.0 / (k + 1) : 0.0).epsilon(1e-13));
    }
    const auto gh = gauss_hermite(10);
    for (int k = 0; k <= 19; ++k) {
      double sum = 0;
      for (std::size_t i = 0; i < gh.nodes.size(); ++i) sum += gh.weights[i] * std::pow(gh.nodes[i], k);
      CHECK(sum == doctest::Approx(k % 2 == 0 ? std::tgamma((k + 1) / 2.0) : 0.0).epsilon(1e-12).scale(std::tgamma((k + 1) / 2.0)));
    }
    const auto ab = gauss_legendre(5, 1.0, 3.0);
    double sum = 0;
    for (std::size_t i = 0; i < ab.nodes.size(); ++i) sum += ab.weights[i] * ab.nodes[i] * ab.nodes[i];
    CHECK(sum == doctest::Approx(26.0 / 3.0));
  }

  TEST_CASE("nilpotent exponential") {
    const SpaceSignature s{2, 2, false};
    const Element a = fermionic_square(s);
    CHECK(mul(nilpotent_exp(a), nilpotent_exp(-a)) == C(s, 1));
    CHECK(nilpotent_exp(a) == C(s, 1) + a + mul(a, a) * Scalar(Q(1, 2)));
    const Element b = P("q1*q3 + 2*q2*q4", s);
    CHECK(nilpotent_exp(a + b) == mul(nilpotent_exp(a), nilpotent_exp(b)));
    CHECK_THROWS(nilpotent_exp(P("x1", s)));
  }

  TEST_CASE("classical Gaussian") {
    const SpaceSignature s{1, 0, false};
    const auto g = super_fourier({C(s, 1), Q(1), Q(0)}, FourierSign::Minus);
    CHECK(g.poly == C(s, Scalar::pi_power(1)));
    CHECK(g.bos_rate == Q(1, 4));
  }

  TEST_CASE("Fourier against Gauss-Hermite quadrature") {
    const auto gh = gauss_hermite(40);
    for (const Rational& rate : {Q(1), Q(1, 4), Q(4)}) {
      for (const char* text : {"1", "x1", "x1^2 - 3*x1*x2", "2/3*x1^3*x2 + x2^4"}) {
        const SpaceSignature s{2, 0, false};
        const Element p = P(text, s);
        for (const FourierSign sign : {FourierSign::Plus, FourierSign::Minus}) {
          const auto g = super_fourier({p, rate, Q(0)}, sign);
          const double sd = sign == FourierSign::Plus ? -1.0 : 1.0;  // exp(-+i<x,y>) = exp(+-i x.y)
          const double scale = 1.0 / std::sqrt(rate.get_d());
          for (const std::vector<double>& y : {std::vector<double>{0.3, -0.7}, {1.1, 0.4}}) {
            std::complex<double> sum = 0;
            for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
              for (std::size_t j = 0; j < gh.nodes.size(); ++j) {
                const std::vector<double> x{gh.nodes[i] * scale, gh.nodes[j] * scale};
                const std::complex<double> phase = std::exp(std::complex<double>(0, -sd * (x[0] * y[0] + x[1] * y[1])));
                sum += gh.weights[i] * gh.weights[j] * scale * scale * phase * evaluate(p, x);
              }
            }
            const std::complex<double> exact = evaluate(g.poly, y) * std::exp(-g.bos_rate.get_d() * (y[0] * y[0] + y[1] * y[1]));
            CHECK(std::abs(exact - sum) < 1e-11);
          }
        }
      }
    }
  }

  TEST_CASE("super Gaussian is an eigenfunction") {
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 1, false}, SpaceSignature{1, 2, false}, SpaceSignature{3, 2, false}}) {
      const auto g = super_fourier(times_exp_x_squared(C(s, 1)), FourierSign::Minus);
      CHECK(g.bos_rate == Q(1, 4));
      CHECK(g.poly == nilpotent_exp(fermionic_square(s) * Scalar(Q(1, 4))) * Scalar::pi_power(s.superdimension()));
    }
  }

  TEST_CASE("Fourier inversion") {
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 1, false}, SpaceSignature{2, 2, false}, SpaceSignature{1, 0, false}}) {
      verify::ElementGenerator gen(s, 89);
      verify::RandomOptions opt = verify::scalar_polynomials(3);
      opt.max_terms = 6;
      for (int t = 0; t < 5; ++t) {
        const Element p = gen.element(opt);
        const Element q = gen.element(opt);
        const GaussianClassFunction f{p, Q(1), Q(0)};
        const auto once = super_fourier(f, FourierSign::Minus);
        const auto twice = super_fourier(once, FourierSign::Plus);
        CHECK(twice.bos_rate == Q(1));
        CHECK(twice.poly == p * two_pi_power(s.superdimension()));
        // linearity
        const auto sum = super_fourier({p + q * Scalar(3), Q(1), Q(0)}, FourierSign::Minus);
        CHECK(sum.poly == once.poly + super_fourier({q, Q(1), Q(0)}, FourierSign::Minus).poly * Scalar(3));
      }
    }
  }

  TEST_CASE("Radon transform of a classical Gaussian") {
    const SpaceSignature s{2, 0, false};
    const RadonValue r = radon_fourier({C(s, 1), Q(1), Q(0)}, {Q(3, 5), Q(4, 5)});
    for (double p : {-1.3, 0.0, 0.4, 2.0}) {
      const auto v = r.evaluate(p);
      REQUIRE(v.size() == 1);
      CHECK(std::abs(v.begin()->second - std::sqrt(std::numbers::pi) * std::exp(-p * p)) < 1e-14);
    }
    const auto direct = radon_direct_numeric({C(s, 1), Q(1), Q(0)}, {Q(3, 5), Q(4, 5)}, Q(1, 2));
    CHECK(std::abs(direct.values.begin()->second - std::sqrt(std::numbers::pi) * std::exp(-0.25)) < 1e-9);
  }

  TEST_CASE("Radon routes agree in superspace") {
    const SpaceSignature s{2, 1, false};
    for (const char* text : {"1", "x1", "x1*q1*q2 + x2^2", "q1*q2*e1 + 2*x1*x2"}) {
      const GaussianClassFunction f = times_exp_x_squared(P(text, s));
      for (const std::vector<Rational>& y : {std::vector<Rational>{Q(6, 5), Q(8, 5)}, {Q(2), Q(0)}}) {
        const RadonValue r = radon_fourier(f, y);
        for (const Rational& p : {Q(0), Q(1, 3), Q(-3, 2)}) {
          const auto direct = radon_direct_numeric(f, y, p);
          CHECK(relative_disagreement(r.evaluate(p.get_d()), direct.values) < 1e-8);
        }
      }
    }
  }

  TEST_CASE("odd functions have odd Radon transforms") {
    const SpaceSignature s{2, 1, false};
    const RadonValue r = radon_fourier(times_exp_x_squared(P("x1 + x2*q1*q2 + x1^3", s)), {Q(6, 5), Q(8, 5)});
    for (double p : {0.2, 0.9, 1.7}) {
      const auto plus = r.evaluate(p), minus = r.evaluate(-p);
      for (const auto& [mono, v] : plus) CHECK(std::abs(v + minus.at(mono)) < 1e-14);
    }
  }

  TEST_CASE("domain errors") {
    const SpaceSignature s{2, 1, false};
    const GaussianClassFunction f = times_exp_x_squared(C(s, 1));
    CHECK_THROWS_AS(radon_fourier(f, {Q(0), Q(0)}), DegenerateDirection);
    CHECK_THROWS_AS(radon_fourier(f, {Q(1), Q(1)}), std::domain_error);
    CHECK_THROWS_AS(radon_fourier(f, {Q(1)}), IndexError);
    CHECK_THROWS_AS(super_fourier({C(s, 1), Q(2), Q(0)}, FourierSign::Plus), std::domain_error);
    CHECK_THROWS_AS(super_fourier({C(s, 1), Q(-1), Q(0)}, FourierSign::Plus), NonIntegrable);
    RadonQuadSpec bad;
    bad.nodes = 0;
    CHECK_THROWS_AS(radon_direct_numeric(f, {Q(2), Q(0)}, Q(0), bad), std::invalid_argument);
  }
}
