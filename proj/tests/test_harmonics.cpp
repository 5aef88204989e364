#include "support.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/harmonics.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/operators.hpp"
#include "supercalc/verify/random.hpp"

using namespace supercalc;
using test::C;
using test::P;
using test::Q;

namespace {

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return binomial(static_cast<int>(n), static_cast<int>(k)).get_num().get_si();
}

}  // namespace

TEST_SUITE("harmonics") {
  TEST_CASE("classical dimension counts") {
    for (int m = 1; m <= 5; ++m) {
      for (int k = 0; k <= 6; ++k) {
        CHECK(classical_harmonic_dimension(k, m) == binom(k + m - 1, m - 1) - binom(k + m - 3, m - 1));
      }
    }
    for (int n = 1; n <= 3; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(fermionic_harmonic_dimension(k, n) == binom(2 * n, k) - binom(2 * n, k - 2));
    }
    CHECK(classical_monogenic_dimension(1, 3) == 16);
  }

  TEST_CASE("harmonic bases") {
    CHECK(harmonic_basis(2, SpaceSignature{3, 0, false}).dimension() == 5);
    CHECK(harmonic_basis(1, SpaceSignature{2, 1, false}).dimension() == 4);
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 1, false}, SpaceSignature{3, 2, false}, SpaceSignature{2, 2, false}}) {
      for (int k = 0; k <= 4; ++k) {
        const GradedBasis b = harmonic_basis(k, s);
        CHECK(b.dimension() == expected_harmonic_dimension(k, s));
        for (const Element& h : b.vectors) {
          CHECK(laplace(h).is_zero());
          CHECK(h.homogeneous_part(k) == h);
        }
      }
      for (int k = 0; k <= 3; ++k) {
        for (const Element& h : bosonic_harmonic_basis(k, s).vectors) CHECK(classical_laplacian(h).is_zero());
        CHECK(bosonic_harmonic_basis(k, s).dimension() == classical_harmonic_dimension(k, s.m));
      }
      for (int k = 0; k <= s.n; ++k) {
        const GradedBasis fb = fermionic_harmonic_basis(k, s);
        CHECK(fb.dimension() == fermionic_harmonic_dimension(k, s.n));
        for (const Element& h : fb.vectors) CHECK(laplace_fermionic(h).is_zero());
      }
    }
  }

  TEST_CASE("monogenic bases") {
    const SpaceSignature s30{3, 0, false};
    const GradedBasis b = monogenic_basis(1, s30, 0);
    CHECK(b.dimension() == classical_monogenic_dimension(1, 3));
    CHECK(monogenic_basis(1, SpaceSignature{2, 0, false}, 0).dimension() == classical_monogenic_dimension(1, 2));
    for (const Element& v : b.vectors) CHECK(dirac_left(v).is_zero());
    const SpaceSignature s21{2, 1, false};
    CHECK(monogenic_basis(0, s21, 2).dimension() == static_cast<int>(word_basis(s21, 2).size()));
    for (const Element& v : monogenic_basis(2, s21, 1).vectors) CHECK(dirac_left(v).is_zero());
    CHECK_THROWS_AS(monogenic_basis(1, s21, 0), std::invalid_argument);
  }

  TEST_CASE("f_kpq") {
    const SpaceSignature s{2, 2, false};
    const Element f = f_kpq(1, 0, 0, s);
    CHECK(f == bosonic_square(s) * Scalar(2) + fermionic_square(s));
    CHECK(laplace(f).is_zero());
    CHECK(f_kpq(0, 1, 1, s) == C(s, Scalar(1) * recip_gamma_half(HalfInt::from_int(2))));
    // f_{k,p,q} times harmonics of the pieces is harmonic
    const SpaceSignature s32{3, 2, false};
    for (int q = 0; q < s32.n; ++q) {
      for (int k = 0; k < s32.n - q + 1; ++k) {
        for (int p = 0; p <= 2; ++p) {
          for (const Element& hb : bosonic_harmonic_basis(p, s32).vectors) {
            for (const Element& hf : fermionic_harmonic_basis(q, s32).vectors) {
              CHECK(laplace(mul(mul(f_kpq(k, p, q, s32), hb), hf)).is_zero());
            }
          }
        }
      }
    }
    CHECK_THROWS_AS(f_kpq(0, 0, 2, s), IndexError);
    CHECK_THROWS_AS(f_kpq(3, 0, 0, s), IndexError);
  }

  TEST_CASE("Fischer decomposition") {
    for (const SpaceSignature s : {SpaceSignature{3, 1, false}, SpaceSignature{5, 1, false}, SpaceSignature{4, 1, false}, SpaceSignature{3, 0, false}}) {
      verify::ElementGenerator gen(s, 83);
      const Element x2 = x_squared(s);
      for (int k = 0; k <= 4; ++k) {
        auto opt = verify::scalar_polynomials(k);
        opt.homogeneous = true;
        for (int t = 0; t < 5; ++t) {
          const Element f = gen.element(opt).homogeneous_part(k);
          Element rebuilt(s);
          for (const auto& [j, h] : fischer_project(f)) {
            CHECK(laplace(h).is_zero());
            rebuilt += mul(power(x2, j), h);
          }
          CHECK(rebuilt == f);
        }
      }
      const Element h = harmonic_basis(2, s).vectors.front();
      const auto parts = fischer_project(h);
      REQUIRE(parts.size() == 1);
      CHECK(parts[0].first == 0);
    }
    CHECK_THROWS_AS(fischer_project(P("x1", SpaceSignature{2, 2, false})), UnsupportedSuperdimension);
    CHECK_THROWS_AS(fischer_project(P("x1 + x1^2", SpaceSignature{3, 1, false})), std::invalid_argument);
  }

  TEST_CASE("divisibility by x squared") {
    const SpaceSignature s{3, 1, false};
    CHECK(divisible_by_x_squared(mul(x_squared(s), P("x1 + q1*x2", s))));
    CHECK(divisible_by_x_squared(Element(s)));
    CHECK_FALSE(divisible_by_x_squared(P("x1^2", s)));
    CHECK_FALSE(divisible_by_x_squared(C(s, 1)));
  }

  TEST_CASE("space of supersphere integrations") {
    const auto s0 = integration_space(SpaceSignature{3, 0, false}, 4);
    CHECK(s0.solution_dimension == 1);
    const auto s31 = integration_space(SpaceSignature{3, 1, false}, 6);
    CHECK(s31.solution_dimension == 2);
    CHECK(s31.basis_rank == 2);
    CHECK(s31.basis_satisfies_constraints);
    CHECK(s31.basis[1].values.at({0, 0}) == Scalar(4));
    const auto s32 = integration_space(SpaceSignature{3, 2, false}, 8);
    CHECK(s32.solution_dimension == 3);
    CHECK(s32.basis_rank == 3);
    CHECK_THROWS_AS(integration_space(SpaceSignature{3, 1, false}, 3), DegreeTooLow);
  }

  TEST_CASE("uniqueness in the pole case") {
    for (const SpaceSignature s : {SpaceSignature{2, 2, false}, SpaceSignature{4, 3, false}, SpaceSignature{2, 3, false}}) {
      const UniquenessReport r = uniqueness_check(s);
      CHECK(r.pole_case);
      CHECK(r.passed);
      CHECK(r.solution_dimension == 1);
      for (const auto& e : r.entries) {
        CHECK(e.c_k_nonzero);
        CHECK(e.not_divisible);
        CHECK(e.not_divisible_bivariate);
      }
    }
    // the supersphere integral is itself the unique functional, so the check must
    // not claim uniqueness where M is not a pole
    CHECK_FALSE(uniqueness_check(SpaceSignature{3, 1, false}).pole_case);
  }
}
