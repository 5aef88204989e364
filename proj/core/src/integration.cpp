#include "supercalc/integration.hpp"

#include <bit>
#include <functional>
#include <optional>

#include "supercalc/errors.hpp"
#include "supercalc/operators.hpp"

namespace supercalc {

namespace {

void require_sphere_dimension(int m) {
  if (m < 2) throw UnsupportedDimension("sphere and ball integrals need m >= 2");
}

std::vector<int> bos_vector(const SuperMonomial& mono, int m) {
  std::vector<int> a(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)] = mono.bos[static_cast<std::size_t>(i)];
  return a;
}

int total(const std::vector<int>& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

Element fermionic_power_over_factorial(const SpaceSignature& space, int j) {
  Element out = power(fermionic_square(space), j);
  return out * Scalar(Rational(1) / factorial(j));
}

// Common coefficient of the Pizzetti-type series for a single monomial
// x^alpha x`_S: (Delta^k mono)(0) with k = (|alpha| + |S|)/2, or nullopt when
// it vanishes.
std::optional<std::pair<int, Rational>> laplace_power_at_origin(const SuperMonomial& mono,
                                                                const SpaceSignature& space) {
  int bos_total = 0;
  Rational bos_value(1);
  for (int i = 0; i < space.m; ++i) {
    const int a = mono.bos[static_cast<std::size_t>(i)];
    if (a % 2 != 0) return std::nullopt;
    bos_total += a;
    bos_value *= factorial(a) / factorial(a / 2);
  }
  const unsigned xs = mono.ferm & space.x_ferm_mask();
  int pairs = 0;
  for (int j = 0; j < space.n; ++j) {
    const unsigned pm = 3u << (2 * j);
    const unsigned hit = xs & pm;
    if (hit == pm) {
      ++pairs;
    } else if (hit != 0) {
      return std::nullopt;
    }
  }
  const int i = bos_total / 2;
  const int k = i + pairs;
  // Delta_b^i x^alpha (0) = (-1)^i i! prod alpha_j!/(alpha_j/2)!
  // Delta_f^l x`_S (0) = (-4)^l l!
  Rational v = bos_value * factorial(i) * factorial(pairs) * binomial(k, i) * rational_pow(Rational(4), pairs);
  if ((i + pairs) % 2 != 0) v = -v;
  return std::make_pair(k, v);
}

SuperMonomial strip_x_variables(const SuperMonomial& mono, const SpaceSignature& space) {
  SuperMonomial out = mono;
  out.bos = {};
  out.ferm = static_cast<std::uint16_t>(mono.ferm & ~space.x_ferm_mask());
  return out;
}

// sum over monomials of  weight(k) * (Delta^k mono)(0)
template <typename Weight>
IntegralValue laplace_series(const Element& f, Weight weight) {
  const SpaceSignature& space = f.space();
  Element out(space);
  for (const auto& [mono, c] : f.terms()) {
    auto lp = laplace_power_at_origin(mono, space);
    if (!lp) continue;
    const Scalar w = weight(lp->first);
    if (w.is_zero()) continue;
    out.add_term(strip_x_variables(mono, space), c * w * Scalar(lp->second));
  }
  return out;
}

Scalar pizzetti_weight(int k, int superdim) {
  // (-1)^k 2 pi^{M/2} / (4^k k! Gamma(k + M/2))
  Scalar w = Scalar::pi_power(superdim) * recip_gamma_half(HalfInt{2 * k + superdim});
  Rational r = Rational(2) / (rational_pow(Rational(4), k) * factorial(k));
  if (k % 2 != 0) r = -r;
  return w * Scalar(r);
}

Scalar superball_weight(int k, int superdim) {
  Scalar w = Scalar::pi_power(superdim) * recip_gamma_half(HalfInt{2 * k + superdim + 2});
  Rational r = Rational(1) / (rational_pow(Rational(4), k) * factorial(k));
  if (k % 2 != 0) r = -r;
  return w * Scalar(r);
}

IntegralValue moment_berezin(const Element& f, const std::function<Scalar(const std::vector<int>&)>& moment) {
  Element out(f.space());
  for (const auto& [alpha, part] : split_bosonic(f)) {
    const Scalar mom = moment(alpha);
    if (mom.is_zero()) continue;
    out += berezin(part) * mom;
  }
  return out;
}

}  // namespace

std::map<std::vector<int>, Element> split_bosonic(const Element& f) {
  std::map<std::vector<int>, Element> parts;
  const SpaceSignature& space = f.space();
  for (const auto& [mono, c] : f.terms()) {
    auto [it, inserted] = parts.try_emplace(bos_vector(mono, space.m), Element(space));
    SuperMonomial rest = mono;
    rest.bos = {};
    it->second.add_term(rest, c);
  }
  return parts;
}

Element berezin(const Element& f) {
  const SpaceSignature& space = f.space();
  const std::uint16_t top = space.x_ferm_mask();
  Element out(space);
  const Scalar factor = Scalar::pi_power(-2 * space.n);
  for (const auto& [mono, c] : f.terms()) {
    if ((mono.ferm & top) != top) continue;
    // x`_1 ... x`_{2n} lead the ordered product, so every derivative acts on
    // the leading factor and contributes a plus sign.
    SuperMonomial mm = mono;
    mm.ferm = static_cast<std::uint16_t>(mono.ferm & ~top);
    out.add_term(mm, c * factor);
  }
  return out;
}

Scalar gaussian_moment(const std::vector<int>& alpha, int m) {
  Scalar prod(1);
  for (int i = 0; i < m; ++i) {
    const int a = i < static_cast<int>(alpha.size()) ? alpha[static_cast<std::size_t>(i)] : 0;
    if (a % 2 != 0) return Scalar();
    prod = prod * gamma_half(HalfInt{a + 1});
  }
  return prod;
}

Scalar sphere_moment(const std::vector<int>& alpha, int m) {
  require_sphere_dimension(m);
  if (static_cast<int>(alpha.size()) > m) throw IndexError("exponent vector longer than m");
  // 2 prod Gamma((a_i+1)/2) / Gamma((|a|+m)/2)
  const Scalar num = gaussian_moment(alpha, m);
  if (num.is_zero()) return num;
  return num * recip_gamma_half(HalfInt{total(alpha) + m}) * Scalar(2);
}

Scalar ball_moment(const std::vector<int>& alpha, int m, const Rational& radius) {
  require_sphere_dimension(m);
  if (sgn(radius) <= 0) throw std::domain_error("radius must be positive");
  const int d = total(alpha) + m;
  return sphere_moment(alpha, m) * Scalar(rational_pow(radius, d) / d);
}

IntegralValue pizzetti_supersphere(const Element& f) {
  const int superdim = f.space().superdimension();
  return laplace_series(f, [superdim](int k) { return pizzetti_weight(k, superdim); });
}

IntegralValue pizzetti_by_laplacian(const Element& f) {
  const SpaceSignature& space = f.space();
  const int superdim = space.superdimension();
  Element out(space);
  Element layer = f;
  for (int k = 0; !layer.is_zero(); ++k) {
    const Element origin = layer.at_origin();
    out += origin * pizzetti_weight(k, superdim);
    layer = laplace(layer);
  }
  return out;
}

IntegralValue supersphere_closed(const Element& f, const Rational& radius) {
  const SpaceSignature& space = f.space();
  require_sphere_dimension(space.m);
  Element out(space);
  std::vector<Element> weights;
  for (int j = 0; j <= space.n; ++j) weights.push_back(fermionic_power_over_factorial(space, j));
  for (const auto& [alpha, part] : split_bosonic(f)) {
    const Scalar mom = sphere_moment(alpha, space.m);
    if (mom.is_zero()) continue;
    const int t = space.m - 2 + total(alpha);
    for (int j = 0; j <= space.n; ++j) {
      const Rational ff = falling_factorial(make_rational(t, 2), j);
      if (sgn(ff) == 0) continue;
      const Element b = berezin(mul(weights[static_cast<std::size_t>(j)], part));
      if (b.is_zero()) continue;
      out += b * (mom * Scalar(radius * ff * rational_pow(radius, t - 2 * j)));
    }
  }
  return out;
}

IntegralValue superball_series(const Element& f) {
  const int superdim = f.space().superdimension();
  require_sphere_dimension(f.space().m);
  return laplace_series(f, [superdim](int k) { return superball_weight(k, superdim); });
}

IntegralValue superball_geometric(const Element& f) {
  const SpaceSignature& space = f.space();
  require_sphere_dimension(space.m);
  Element out(space);
  std::vector<Element> weights;
  for (int j = 1; j <= space.n; ++j) weights.push_back(fermionic_power_over_factorial(space, j));
  for (const auto& [alpha, part] : split_bosonic(f)) {
    out += berezin(part) * ball_moment(alpha, space.m, Rational(1));
    const Scalar mom = sphere_moment(alpha, space.m);
    if (mom.is_zero()) continue;
    const int t = space.m - 2 + total(alpha);
    for (int j = 0; j < space.n; ++j) {
      // (1/2) [r (d/dr^2)^j r^{m-2} f]_{r=1}
      const Rational ff = falling_factorial(make_rational(t, 2), j) / 2;
      if (sgn(ff) == 0) continue;
      const Element b = berezin(mul(weights[static_cast<std::size_t>(j)], part));
      if (b.is_zero()) continue;
      out += b * (mom * Scalar(ff));
    }
  }
  return out;
}

IntegralValue superball(const Element& f) {
  Element series = superball_series(f);
  Element geometric = superball_geometric(f);
  if (!(series == geometric)) {
    throw InternalInconsistency("superball series and geometric forms disagree");
  }
  return series;
}

IntegralValue supersphere_radius(const Element& f, const Rational& radius) {
  const SpaceSignature& space = f.space();
  require_sphere_dimension(space.m);
  Element closed = supersphere_closed(f, radius);
  Element scaled = pizzetti_supersphere(scale_variables(f, radius)) *
                   Scalar(rational_pow(radius, space.superdimension() - 1));
  if (!(closed == scaled)) {
    throw InternalInconsistency("radius scaling law disagrees with the closed form");
  }
  return closed;
}

IntegralValue gaussian_integral(const Element& f) {
  const SpaceSignature& space = f.space();
  Element expo(space);
  for (int j = 0; j <= space.n; ++j) expo += fermionic_power_over_factorial(space, j);
  const int m = space.m;
  return moment_berezin(mul(expo, f), [m](const std::vector<int>& a) { return gaussian_moment(a, m); });
}

IntegralValue gaussian_merged(const Element& f) {
  const int superdim = f.space().superdimension();
  return laplace_series(f, [superdim](int k) {
    Scalar w = Scalar::pi_power(superdim) * Scalar(Rational(1) / (rational_pow(Rational(4), k) * factorial(k)));
    return k % 2 == 0 ? w : -w;
  });
}

IntegralValue phi_k(const Element& f, int k) {
  const SpaceSignature& space = f.space();
  if (k < 0 || k > space.n) throw IndexError("phi index must lie in 0..n");
  return pizzetti_supersphere(mul(power(fermionic_square(space), k), f));
}

std::map<int, Element> radial_profile(const Element& p) {
  const SpaceSignature& space = p.space();
  require_sphere_dimension(space.m);
  std::map<int, Element> coeffs;
  auto add = [&](int k, const Element& e) {
    if (e.is_zero()) return;
    auto [it, inserted] = coeffs.try_emplace(k, e);
    if (!inserted) it->second += e;
    if (it->second.is_zero()) coeffs.erase(it);
  };
  std::vector<Element> fpow;
  for (int j = 0; j <= space.n; ++j) fpow.push_back(fermionic_power_over_factorial(space, j));
  // Terms of P grouped by bosonic exponent; fermionic degree enters via f(Rx).
  for (const auto& [alpha, part] : split_bosonic(p)) {
    const Scalar mom = sphere_moment(alpha, space.m);
    if (mom.is_zero()) continue;
    const int t = space.m - 2 + total(alpha);
    for (int d = 0; d <= 2 * space.n; ++d) {
      Element layer = part.homogeneous_part(d);
      if (layer.is_zero()) continue;
      const int base_power = total(alpha) + d;
      for (int j = 0; j <= space.n; ++j) {
        for (int l = 0; l + j <= space.n; ++l) {
          const Element b = berezin(mul(mul(fpow[static_cast<std::size_t>(j)], fpow[static_cast<std::size_t>(l)]), layer));
          if (b.is_zero()) continue;
          // sum_i C(j,i) ffall(t/2,i) (-R^2)^{j-i}, times R^{2l}
          for (int i = 0; i <= j; ++i) {
            Rational c = binomial(j, i) * falling_factorial(make_rational(t, 2), i);
            if (sgn(c) == 0) continue;
            if ((j - i) % 2 != 0) c = -c;
            add(base_power + 2 * (j - i) + 2 * l, b * (mom * Scalar(c)));
          }
        }
      }
    }
  }
  return coeffs;
}

IntegralValue radial_integral(const Element& p) {
  const SpaceSignature& space = p.space();
  const int superdim = space.superdimension();
  Element out(space);
  for (const auto& [k, c] : radial_profile(p)) {
    if (superdim + k <= 0) throw NonIntegrable("radial integral diverges at R = 0");
    out += c * (gamma_half(HalfInt{superdim + k}) * Scalar(make_rational(1, 2)));
  }
  return out;
}

IntegralValue sphere_berezin(const Element& f) {
  const int m = f.space().m;
  require_sphere_dimension(m);
  return moment_berezin(f, [m](const std::vector<int>& a) { return sphere_moment(a, m); });
}

IntegralValue ball_berezin(const Element& f) {
  const int m = f.space().m;
  require_sphere_dimension(m);
  return moment_berezin(f, [m](const std::vector<int>& a) { return ball_moment(a, m, Rational(1)); });
}

namespace {

void require_fermionic_only(const Element& a, const SpaceSignature& space) {
  if (!(a.space() == space)) throw SpaceMismatch("fermionic weight lives in another space");
  for (const auto& [mono, c] : a.terms()) {
    if (mono.has_generators() || mono.bos_degree() != 0 || (mono.ferm & ~space.x_ferm_mask()) != 0) {
      throw BadAlpha("weight must be a polynomial in the x` variables only");
    }
  }
}

}  // namespace

bool fermionic_cauchy_check(const Element& f, const Element& g, const Element& alpha) {
  require_fermionic_only(alpha, f.space());
  const Element fa = mul(f, alpha);
  const Element alpha_d = ferm_dirac_right(alpha);
  // f alpha^ d = (f alpha) d - f (alpha d)
  const Element hat = ferm_dirac_right(fa) - mul(f, alpha_d);
  const Element lhs = -berezin(mul(hat, g)) + berezin(mul(fa, ferm_dirac_left(g)));
  const Element rhs = berezin(mul(mul(f, alpha_d), g));
  return lhs == rhs;
}

bool superball_cauchy_check(const Element& f, const Element& g) {
  require_sphere_dimension(f.space().m);
  const Element lhs = superball(mul(dirac_right(f), g) + mul(f, dirac_left(g)));
  const Element rhs = -pizzetti_supersphere(mul(mul(f, vector_x(f.space())), g));
  return lhs == rhs;
}

bool box_cauchy_check(const Element& f, const Element& g, const Element& beta) {
  const SpaceSignature& space = f.space();
  require_sphere_dimension(space.m);
  require_fermionic_only(beta, space);
  const Element fb = mul(f, beta);
  const Element beta_d = dirac_right(beta);
  const Element hat = dirac_right(fb) - mul(f, beta_d);
  const Element lhs = ball_berezin(mul(hat, g) + mul(fb, dirac_left(g)));
  const Element boundary = sphere_berezin(mul(mul(fb, vector_x_bosonic(space)), g));
  const Element rhs = -boundary + ball_berezin(mul(mul(f, ferm_dirac_right(beta)), g));
  return lhs == rhs;
}

}  // namespace supercalc
