#pragma once

// Exact coefficient ring: Gaussian rationals extended by half-integer
// powers of pi. Every integral value produced by the engine lives here.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supercalc {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational rational_pow(const Rational& base, int exponent);
Rational factorial(int k);
Rational binomial(int n, int k);
/// x (x-1) ... (x-j+1); equals 1 for j = 0.
Rational falling_factorial(const Rational& x, int j);
/// Exact square root when `q` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// re + im*i with rational parts.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static GaussRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// "3/2", "3/2 + 1/4 i", "-1 i".
std::string to_string(const GaussRational& c);
GaussRational parse_gauss_rational(const std::string& text);

/// Finite sum  sum_s c_s * pi^(s/2)  with c_s Gaussian rationals.
///
/// Terms are kept sorted by the exponent s with no zero coefficient stored,
/// so equality is plain term-list equality.
class Scalar {
 public:
  using Term = std::pair<int, GaussRational>;

  Scalar() = default;
  Scalar(long v);                    // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);         // NOLINT(google-explicit-constructor)
  Scalar(const GaussRational& c, int half_pi_exponent = 0);  // NOLINT

  /// pi^(s/2).
  static Scalar pi_power(int half_exponent);
  static Scalar imaginary_unit() { return Scalar(GaussRational::imaginary_unit()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  GaussRational coefficient(int half_exponent) const;

  /// The rational value if this is a real multiple of pi^0.
  std::optional<Rational> as_rational() const;
  bool is_real() const;
  std::complex<double> to_complex() const;

  /// Inverse of a single-term scalar; throws std::domain_error otherwise.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const GaussRational& c);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int s, const GaussRational& c);
  std::vector<Term> terms_;
};

std::string to_string(const Scalar& s);

/// A half-integer s = twice / 2.
struct HalfInt {
  int twice = 0;

  static HalfInt from_int(int k) { return {2 * k}; }
  static HalfInt half(int twice_value) { return {twice_value}; }

  bool is_integer() const { return twice % 2 == 0; }
  bool is_pole() const { return is_integer() && twice <= 0; }
  HalfInt operator+(int k) const { return {twice + 2 * k}; }
  Rational value() const { return make_rational(twice, 2); }
  friend bool operator==(HalfInt, HalfInt) = default;
};

/// Exact Gamma(s) on half-integers. Throws PoleError at 0, -1, -2, ...
Scalar gamma_half(HalfInt s);
/// Exact 1/Gamma(s); zero at the poles of Gamma.
Scalar recip_gamma_half(HalfInt s);

}  // namespace supercalc
