#include "supercalc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "supercalc/errors.hpp"

namespace supercalc {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("negative power of zero");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

Rational factorial(int k) {
  if (k < 0) throw std::domain_error("factorial of negative integer");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational falling_factorial(const Rational& x, int j) {
  Rational result(1);
  for (int i = 0; i < j; ++i) result *= x - i;
  return result;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  }
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t.front() == '+') t.erase(t.begin());
  const auto slash = t.find('/');
  auto check_digits = [](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
    if (start >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  if (slash == std::string::npos) {
    if (!check_digits(t, true)) throw std::invalid_argument("bad rational: " + text);
    return Rational(Integer(t));
  }
  const std::string num = t.substr(0, slash);
  const std::string den = t.substr(slash + 1);
  if (!check_digits(num, true) || !check_digits(den, false)) {
    throw std::invalid_argument("bad rational: " + text);
  }
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// GaussRational

GaussRational GaussRational::inverse() const {
  const Rational norm = re * re + im * im;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero");
  return {Rational(re / norm), Rational(-im / norm)};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (o.is_real()) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussRational& c) {
  if (sgn(c.im) == 0) return to_string(c.re);
  const std::string imag = to_string(abs(c.im)) + " i";
  if (sgn(c.re) == 0) return (sgn(c.im) < 0 ? "-" : "") + imag;
  return to_string(c.re) + (sgn(c.im) < 0 ? " - " : " + ") + imag;
}

GaussRational parse_gauss_rational(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  }
  if (t.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (t.back() != 'i') return GaussRational(parse_rational(t));
  t.pop_back();
  // split at the last sign that is not in leading position
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if (t[k] == '+' || t[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    if (t.empty() || t == "+") return {Rational(0), Rational(1)};
    if (t == "-") return {Rational(0), Rational(-1)};
    return {Rational(0), parse_rational(t)};
  }
  Rational re = parse_rational(t.substr(0, split));
  std::string im_text = t.substr(split);
  Rational im = (im_text == "+") ? Rational(1) : (im_text == "-") ? Rational(-1) : parse_rational(im_text);
  return {re, im};
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long v) {
  if (v != 0) terms_.emplace_back(0, GaussRational(v));
}

Scalar::Scalar(const Rational& q) {
  if (sgn(q) != 0) terms_.emplace_back(0, GaussRational(q));
}

Scalar::Scalar(const GaussRational& c, int half_pi_exponent) {
  if (!c.is_zero()) terms_.emplace_back(half_pi_exponent, c);
}

Scalar Scalar::pi_power(int half_exponent) { return Scalar(GaussRational(1), half_exponent); }

GaussRational Scalar::coefficient(int half_exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exponent,
                             [](const Term& t, int s) { return t.first < s; });
  if (it != terms_.end() && it->first == half_exponent) return it->second;
  return GaussRational();
}

std::optional<Rational> Scalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_real()) {
    return terms_[0].second.re;
  }
  return std::nullopt;
}

bool Scalar::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_real(); });
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> sum = 0.0;
  const double sqrt_pi = std::sqrt(3.14159265358979323846);
  for (const auto& [s, c] : terms_) sum += c.to_complex() * std::pow(sqrt_pi, s);
  return sum;
}

Scalar Scalar::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("only single-term scalars are invertible");
  return Scalar(terms_[0].second.inverse(), -terms_[0].first);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void Scalar::add_term(int s, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, int key) { return t.first < key; });
  if (it != terms_.end() && it->first == s) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{s, c});
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    GaussRational c = a.terms_[0].second * b.terms_[0].second;
    out.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first, std::move(c));
    return out;
  }
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) out.add_term(sa + sb, ca * cb);
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar& Scalar::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    const bool compound = !c.is_real() && sgn(c.re) != 0;
    std::string coef = compound ? "(" + to_string(c) + ")" : to_string(c);
    if (e == 0) {
      out += coef;
    } else {
      out += coef + "*pi^(" + to_string(make_rational(e, 2)) + ")";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gamma on half-integers

Scalar gamma_half(HalfInt s) {
  if (s.is_pole()) {
    throw PoleError("Gamma has a pole at " + to_string(s.value()));
  }
  if (s.is_integer()) {
    return Scalar(factorial(s.twice / 2 - 1));
  }
  // Start from Gamma(1/2) = pi^(1/2) and walk with Gamma(s+1) = s Gamma(s).
  Rational coef(1);
  int twice = 1;
  while (twice < s.twice) {
    coef *= make_rational(twice, 2);
    twice += 2;
  }
  while (twice > s.twice) {
    twice -= 2;
    coef /= make_rational(twice, 2);
  }
  return Scalar(GaussRational(coef), 1);
}

Scalar recip_gamma_half(HalfInt s) {
  if (s.is_pole()) return Scalar();
  return gamma_half(s).inverse();
}

}  // namespace supercalc
