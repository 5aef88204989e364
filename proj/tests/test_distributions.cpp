#include "support.hpp"
#include "supercalc/distributions.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/verify/random.hpp"

using namespace supercalc;
using test::C;
using test::P;
using test::Q;

TEST_SUITE("distributions") {
  TEST_CASE("radial expansions") {
    const SpaceSignature s0{2, 0, false}, s1{2, 1, false};
    const auto d0 = expand_radial(RadialKind::Delta, Q(1), s0);
    REQUIRE(d0.term_list().size() == 1);
    CHECK(d0.term_list()[0].order == 0);
    CHECK(d0.term_list()[0].coeff == C(s0, 1));

    RadialDistribution delta1(s1);
    delta1.add(0, Q(1), C(s1, 1));
    delta1.add(1, Q(1), fermionic_square(s1));
    CHECK(expand_radial(RadialKind::Delta, Q(1), s1) == delta1);

    RadialDistribution h1(s1);
    h1.add(-1, Q(1), C(s1, 1));
    h1.add(0, Q(1), fermionic_square(s1));
    CHECK(expand_radial(RadialKind::Heaviside, Q(1), s1) == h1);

    const SpaceSignature s3{2, 3, false};
    const auto d3 = expand_radial(RadialKind::Delta, Q(1, 4), s3);
    CHECK(d3.term_list().size() == 4);
    CHECK(d3.terms().at({3, Q(1, 4)}) == power(fermionic_square(s3), 3) * Scalar(Q(1, 6)));
  }

  TEST_CASE("Dirac of the Heaviside function") {
    for (int m = 1; m <= 4; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const SpaceSignature s{m, n, false};
        for (const Rational& c : {Q(1), Q(4), Q(1, 4)}) {
          const auto lhs = dirac_on_radial(expand_radial(RadialKind::Heaviside, c, s));
          const auto rhs = left_multiply(vector_x(s) * Scalar(2), expand_radial(RadialKind::Delta, c, s));
          CHECK(lhs == rhs);
        }
      }
    }
    const SpaceSignature s0{3, 0, false};
    RadialDistribution expected(s0);
    expected.add(0, Q(1), vector_x_bosonic(s0) * Scalar(2));
    CHECK(dirac_on_radial(expand_radial(RadialKind::Heaviside, Q(1), s0)) == expected);
  }

  TEST_CASE("pairing reproduces supersphere and superball integrals") {
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 1, false}, SpaceSignature{2, 2, false}, SpaceSignature{3, 2, false}, SpaceSignature{3, 0, false}}) {
      verify::ElementGenerator gen(s, 79);
      const auto opt = verify::scalar_polynomials(4);
      const auto delta = expand_radial(RadialKind::Delta, Q(1), s);
      const auto heaviside = expand_radial(RadialKind::Heaviside, Q(1), s);
      CHECK(pair_radial(delta, Element(s)).is_zero());
      CHECK(pair_radial(heaviside, C(s, 1)) == superball(C(s, 1)));
      for (int t = 0; t < 15; ++t) {
        const Element f = gen.element(opt);
        CHECK(pair_radial(delta, f) * Scalar(2) == pizzetti_supersphere(f));
        CHECK(pair_radial(heaviside, f) == superball(f));
        // delta(x^2 + R^2) is the radius-R supersphere up to the Jacobian 1/(2R)
        CHECK(pair_radial(expand_radial(RadialKind::Delta, Q(9, 4), s), f) * Scalar(3) == supersphere_closed(f, Q(3, 2)));
      }
    }
  }

  TEST_CASE("pairing errors") {
    const SpaceSignature s1{1, 1, false}, s2{2, 1, false};
    CHECK_THROWS_AS(pair_radial(expand_radial(RadialKind::Delta, Q(1), s1), C(s1, 1)), UnsupportedDimension);
    CHECK_THROWS_AS(pair_radial(expand_radial(RadialKind::Delta, Q(2), s2), C(s2, 1)), std::invalid_argument);
  }

  TEST_CASE("hyperplane expansion") {
    const SpaceSignature d0{2, 0, true}, d1{2, 1, true};
    CHECK(expand_hyperplane({Q(3, 5), Q(4, 5)}, Q(1), d0).terms.size() == 1);
    const Element pairing = fermionic_pairing(d1);
    CHECK(pairing == P("1/2*q1*y2 - 1/2*q2*y1", d1));
    const auto h = expand_hyperplane({Q(3, 5), Q(4, 5)}, Q(1, 2), d1);
    REQUIRE(h.terms.size() == 3);
    CHECK(h.terms.at(1) == pairing);
    const Element top = h.terms.at(2);
    REQUIRE(top.size() == 1);
    CHECK(top.terms().begin()->first.ferm == 0xF);
    CHECK(top == mul(pairing, pairing) * Scalar(Q(1, 2)));
    CHECK_THROWS_AS(expand_hyperplane({Q(1), Q(0)}, Q(0), SpaceSignature{2, 1, false}), SpaceMismatch);
    CHECK_THROWS_AS(expand_hyperplane({Q(1)}, Q(0), d1), IndexError);
  }
}
