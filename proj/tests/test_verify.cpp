#include <cmath>
#include <cstdlib>

#include "support.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/verify/io.hpp"
#include "supercalc/verify/numeric.hpp"
#include "supercalc/verify/random.hpp"
#include "supercalc/verify/suites.hpp"

using namespace supercalc;
using namespace supercalc::verify;
using test::C;
using test::P;
using test::Q;

TEST_SUITE("verify") {
  TEST_CASE("random generation is reproducible") {
    const SpaceSignature s{3, 2, false};
    ElementGenerator a(s, 99), b(s, 99), c(s, 100);
    RandomOptions opt;
    bool any_difference = false;
    for (int t = 0; t < 20; ++t) {
      const Element ea = a.element(opt), eb = b.element(opt), ec = c.element(opt);
      CHECK(ea == eb);
      any_difference = any_difference || !(ea == ec);
    }
    CHECK(any_difference);
    CHECK(derive_seed(7, 1) != derive_seed(7, 2));
    CHECK(derive_seed(7, 1) == derive_seed(7, 1));

    ElementGenerator g(s, 5);
    RandomOptions hom;
    hom.homogeneous = true;
    hom.max_degree = 3;
    for (int t = 0; t < 20; ++t) {
      const Element e = g.element(hom);
      for (const auto& [mono, coef] : e.terms()) CHECK(mono.variable_degree(s) == 3);
      const Rational q = g.coefficient();
      CHECK(sgn(q) != 0);
      CHECK(abs(q) <= 9);
    }
    RandomOptions fo;
    fo.fermionic_only = true;
    for (int t = 0; t < 20; ++t) {
      const Element e = g.element(fo);
      for (const auto& [mono, coef] : e.terms()) {
        CHECK(mono.bos_degree() == 0);
        CHECK_FALSE(mono.has_generators());
      }
    }
  }

  TEST_CASE("JSON round trip") {
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 2, false}}) {
      ElementGenerator g(s, 11);
      for (int t = 0; t < 30; ++t) {
        Element e = g.element(RandomOptions{});
        e *= Scalar::pi_power(g.uniform(-3, 3)) * (Scalar(1) + Scalar::imaginary_unit() * Scalar(Q(2, 7)));
        CHECK(element_from_json(to_json(e), s) == e);
      }
    }
    const Scalar x = Scalar(Q(-3, 4)) * Scalar::pi_power(-1) + Scalar::imaginary_unit();
    CHECK(scalar_from_json(to_json(x)) == x);
    CHECK(to_json(Scalar(2)).dump() == R"({"0":"2"})");
  }

  TEST_CASE("suite reports are deterministic") {
    const SpaceSignature s{3, 1, false};
    for (const std::string& id : {std::string("dirac-square"), std::string("green-superball"), std::string("fischer")}) {
      const auto a = to_json(run_suite(id, s, 3, 12, 7)).dump();
      const auto b = to_json(run_suite(id, s, 3, 12, 7)).dump();
      CHECK(a == b);
    }
    CHECK_THROWS_AS(run_suite("no-such-suite", s, 3, 1, 7), UnknownSuite);
    CHECK(suite_names().size() == 17);
    const auto skipped = run_suite("pizzetti-closed", SpaceSignature{1, 1, false}, 3, 1, 7);
    CHECK_FALSE(skipped.skipped.empty());
    CHECK(skipped.passed());
  }

  TEST_CASE("trial runner collects failures in order") {
    const auto failures = run_trials(40, [](int t) -> std::optional<Failure> {
      if (t % 7 == 3) return Failure{0, std::to_string(t), "a", "b"};
      return std::nullopt;
    });
    REQUIRE(failures.size() == 6);
    for (std::size_t i = 0; i < failures.size(); ++i) CHECK(failures[i].trial == static_cast<int>(7 * i + 3));
    CHECK_THROWS_AS(run_trials(5, [](int t) -> std::optional<Failure> {
                      if (t == 2) throw IndexError("boom");
                      return std::nullopt;
                    }),
                    IndexError);
  }

  TEST_CASE("numeric supersphere oracle on polynomials") {
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 1, false}, SpaceSignature{3, 2, false}, SpaceSignature{4, 1, false}}) {
      ElementGenerator g(s, 13);
      const auto opt = scalar_polynomials(4);
      for (int t = 0; t < 5; ++t) {
        const Element f = g.element(opt);
        for (const Rational& radius : {Q(1), Q(3, 2)}) {
          const NumericResult r = numeric_supersphere(channelize(f), radius.get_d());
          const Element exact = supersphere_closed(f, radius);
          const double value = r.values.count(SuperMonomial{}) ? r.values.at(SuperMonomial{}) : 0.0;
          const double expected = exact.coefficient(SuperMonomial{}).to_complex().real();
          CHECK(value == doctest::Approx(expected).epsilon(1e-8).scale(1));
          CHECK(r.error < 1e-8);
        }
      }
      const NumericResult zero = numeric_supersphere(channelize(Element(s)), 1.0);
      for (const auto& [w, v] : zero.values) CHECK(v == 0.0);
    }
  }

  TEST_CASE("numeric oracle error shrinks with more nodes") {
    const SpaceSignature s{3, 1, false};
    const auto f = channelize(times_exp_x_squared(P("x1^2 + q1*q2*x3", s)));
    QuadSpec coarse;
    coarse.angular_nodes = 4;
    coarse.tolerance = 1.0;
    QuadSpec fine = coarse;
    fine.angular_nodes = 8;
    const auto a = numeric_supersphere(f, 1.0, coarse);
    const auto b = numeric_supersphere(f, 1.0, fine);
    CHECK(b.error < a.error);
    QuadSpec strict = coarse;
    strict.tolerance = 1e-30;
    CHECK_THROWS_AS(numeric_supersphere(f, 1.0, strict), QuadratureFailure);
  }

  TEST_CASE("sphere integral") {
    const double pi = 3.14159265358979323846;
    CHECK(sphere_integral([](const std::vector<double>&) { return 1.0; }, 3, 8, 0) == doctest::Approx(4 * pi));
    CHECK(sphere_integral([](const std::vector<double>& x) { return x[0] * x[0]; }, 2, 8, 0) == doctest::Approx(pi));
    // Monte Carlo branch beyond m = 4: area of S^4 is 8 pi^2 / 3
    CHECK(sphere_integral([](const std::vector<double>&) { return 1.0; }, 5, 8, 1 << 12) == doctest::Approx(8 * pi * pi / 3).epsilon(1e-12));
  }
}
