#include "supercalc/transforms.hpp"

#include <cmath>
#include <numbers>

#include "supercalc/distributions.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/quadrature.hpp"

namespace supercalc {

namespace {

using Poly1 = std::vector<GaussRational>;  // coefficients in one variable

// Q_k with  int x^k exp(i s x y - a x^2) dx = sqrt(pi/a) Q_k(y) exp(-y^2/(4a)).
Poly1 gauss_fourier_poly(int k, const Rational& a, int s) {
  Poly1 q{GaussRational(1)};
  const GaussRational factor = GaussRational::imaginary_unit() * GaussRational(Rational(-s));
  const Rational half_inv = Rational(1) / (2 * a);
  for (int step = 0; step < k; ++step) {
    Poly1 next(q.size() + 1);
    for (std::size_t j = 1; j < q.size(); ++j) next[j - 1] += q[j] * GaussRational(Rational(static_cast<long>(j)));
    for (std::size_t j = 0; j < q.size(); ++j) next[j + 1] -= q[j] * GaussRational(half_inv);
    for (auto& c : next) c = c * factor;
    q = std::move(next);
  }
  return q;
}

Rational rational_root_or_throw(const Rational& v, const char* what) {
  const auto r = rational_sqrt(v);
  if (!r) throw std::domain_error(std::string(what) + " must be the square of a rational, got " + to_string(v));
  return *r;
}

void require_integrable(const GaussianClassFunction& f) {
  if (sgn(f.bos_rate) <= 0) throw NonIntegrable("bosonic Gaussian rate must be positive");
  if (f.space().doubled) throw SpaceMismatch("Gaussian-class functions live in an undoubled space");
}

// Doubled-space element without x` variables, moved back with y` -> x`.
Element undouble(const Element& e, const SpaceSignature& target) {
  const unsigned low = target.x_ferm_mask();
  Element out(target);
  for (const auto& [mono, c] : e.terms()) {
    if ((mono.ferm & low) != 0) throw InternalInconsistency("x` variable survived a Berezin integral");
    SuperMonomial mm = mono;
    mm.ferm = static_cast<std::uint16_t>(mono.ferm >> (2 * target.n));
    out.add_term(mm, c);
  }
  return out;
}

std::complex<double> to_complex(const Scalar& s) { return s.to_complex(); }

}  // namespace

GaussianClassFunction times_exp_x_squared(const Element& p) { return {p, Rational(1), Rational(1)}; }

Element nilpotent_exp(const Element& a) {
  Element out = Element::constant(a.space(), Scalar(1));
  Element term = out;
  for (int j = 1;; ++j) {
    term = mul(term, a) * Scalar(make_rational(1, j));
    if (term.is_zero()) break;
    if (j > 64) throw InternalInconsistency("exponent argument is not nilpotent");
    out += term;
  }
  return out;
}

Element fermionic_part(const GaussianClassFunction& f) {
  if (sgn(f.ferm_rate) == 0) return f.poly;
  return mul(f.poly, nilpotent_exp(fermionic_square(f.space()) * Scalar(f.ferm_rate)));
}

GaussianClassFunction super_fourier(const GaussianClassFunction& f, FourierSign sign) {
  require_integrable(f);
  const SpaceSignature& space = f.space();
  const SpaceSignature doubled = space.with_doubling(true);
  const Rational root_a = rational_root_or_throw(f.bos_rate, "bosonic rate");

  // exp(-+ i<x,y>) = exp(+- i x_b.y_b) exp(-+ i<x`,y`>)
  const int s = sign == FourierSign::Plus ? 1 : -1;
  const Scalar ferm_factor = Scalar::imaginary_unit() * Scalar(-s);
  const Element kernel = nilpotent_exp(fermionic_pairing(doubled) * ferm_factor);
  const Element integrand = mul(kernel, fermionic_part(f).embedded_in(doubled));

  std::map<int, Poly1> cache;
  auto q_of = [&](int k) -> const Poly1& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, gauss_fourier_poly(k, f.bos_rate, s)).first;
    return it->second;
  };

  Element out(doubled);
  for (const auto& [alpha, part] : split_bosonic(integrand)) {
    const Element grass = berezin(part);
    if (grass.is_zero()) continue;
    Element bos = Element::constant(doubled, Scalar(1));
    for (int i = 0; i < space.m; ++i) {
      const Poly1& q = q_of(alpha[static_cast<std::size_t>(i)]);
      Element factor(doubled);
      for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] == GaussRational()) continue;
        SuperMonomial mono;
        mono.bos[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
        factor.add_term(mono, Scalar(q[j]));
      }
      bos = mul(bos, factor);
    }
    out += mul(bos, grass);
  }
  // prod_i sqrt(pi / a)
  out *= Scalar::pi_power(space.m) * Scalar(rational_pow(Rational(1) / root_a, space.m));
  return {undouble(out, space), Rational(1) / (4 * f.bos_rate), Rational(0)};
}

std::map<SuperMonomial, std::complex<double>> RadonValue::evaluate(double p) const {
  std::map<SuperMonomial, std::complex<double>> out;
  const double envelope = std::exp(-gauss_rate.get_d() * p * p);
  for (const auto& [k, e] : poly_p) {
    const double pk = std::pow(p, k);
    for (const auto& [mono, c] : e.terms()) out[mono] += to_complex(c) * (pk * envelope);
  }
  return out;
}

RadonValue radon_fourier(const GaussianClassFunction& f, const std::vector<Rational>& y_bos) {
  require_integrable(f);
  const SpaceSignature& space = f.space();
  if (static_cast<int>(y_bos.size()) != space.m) throw IndexError("direction must have m components");
  Rational norm2;
  for (const auto& v : y_bos) norm2 += v * v;
  if (sgn(norm2) == 0) throw DegenerateDirection("Radon direction y_b is zero");

  const GaussianClassFunction fourier = super_fourier(f, FourierSign::Minus);
  // F^-(f)(r y) = sum_k r^k A_k exp(-c r^2)
  std::map<int, Element> by_power;
  for (const auto& [mono, coef] : fourier.poly.terms()) {
    Rational value(1);
    for (int i = 0; i < space.m; ++i) value *= rational_pow(y_bos[static_cast<std::size_t>(i)], mono.bos[static_cast<std::size_t>(i)]);
    if (sgn(value) == 0) continue;
    SuperMonomial mm = mono;
    mm.bos = {};
    const int k = mono.bos_degree() + mono.ferm_degree();
    auto [it, inserted] = by_power.try_emplace(k, Element(space));
    it->second.add_term(mm, coef * Scalar(value));
  }
  const Rational c = fourier.bos_rate * norm2;
  const Rational root_c = rational_root_or_throw(c, "|y_b|^2 / (4 bos_rate)");

  RadonValue out;
  out.space = space;
  out.y_bos = y_bos;
  out.gauss_rate = Rational(1) / (4 * c);
  // (2 pi)^{-1} sqrt(pi / c)
  const Scalar pref = Scalar::pi_power(-1) * Scalar(Rational(1) / (2 * root_c));
  for (const auto& [k, a] : by_power) {
    if (a.is_zero()) continue;
    const Poly1 q = gauss_fourier_poly(k, c, 1);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] == GaussRational()) continue;
      auto [it, inserted] = out.poly_p.try_emplace(static_cast<int>(j), Element(space));
      it->second += a * (pref * Scalar(q[j]));
    }
  }
  for (auto it = out.poly_p.begin(); it != out.poly_p.end();) {
    it = it->second.is_zero() ? out.poly_p.erase(it) : std::next(it);
  }
  return out;
}

namespace {

using DPoly = std::vector<double>;

// Orthonormal basis of the complement of unit vector u.
std::vector<std::vector<double>> complement_basis(const std::vector<double>& u) {
  const std::size_t m = u.size();
  std::vector<std::vector<double>> basis;
  for (std::size_t e = 0; e < m && basis.size() + 1 < m; ++e) {
    std::vector<double> v(m, 0.0);
    v[e] = 1.0;
    auto project_out = [&](const std::vector<double>& w) {
      double dot = 0;
      for (std::size_t i = 0; i < m; ++i) dot += v[i] * w[i];
      for (std::size_t i = 0; i < m; ++i) v[i] -= dot * w[i];
    };
    project_out(u);
    for (const auto& b : basis) project_out(b);
    double nrm = 0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) continue;
    for (double& x : v) x /= nrm;
    basis.push_back(std::move(v));
  }
  return basis;
}

double eval_poly(const DPoly& q, double s) {
  double v = 0;
  for (std::size_t j = q.size(); j-- > 0;) v = v * s + q[j];
  return v;
}

// int over the hyperplane complement of (d/ds)^j [x^beta exp(-a|x|^2)] at
// x = s0 u + z, weighted by exp(-a|z|^2) via Gauss-Hermite.
double hyperplane_moment(const std::vector<int>& beta, int j, double a, const std::vector<double>& u, double s0,
                         const QuadratureRule& rule) {
  const std::size_t m = u.size();
  const auto comp = complement_basis(u);
  const std::size_t dims = comp.size();
  const double scale = 1.0 / std::sqrt(a);
  std::vector<std::size_t> idx(dims, 0);
  double total = 0;
  for (;;) {
    std::vector<double> z(m, 0.0);
    double w = 1.0;
    for (std::size_t d = 0; d < dims; ++d) {
      const double t = rule.nodes[idx[d]] * scale;
      w *= rule.weights[idx[d]] * scale;
      for (std::size_t i = 0; i < m; ++i) z[i] += t * comp[d][i];
    }
    // q(s) = prod (s u_i + z_i)^{beta_i}
    DPoly q{1.0};
    for (std::size_t i = 0; i < m; ++i) {
      for (int e = 0; e < beta[i]; ++e) {
        DPoly next(q.size() + 1, 0.0);
        for (std::size_t k = 0; k < q.size(); ++k) {
          next[k] += q[k] * z[i];
          next[k + 1] += q[k] * u[i];
        }
        q = std::move(next);
      }
    }
    for (int step = 0; step < j; ++step) {
      DPoly next(q.size() + 1, 0.0);
      for (std::size_t k = 1; k < q.size(); ++k) next[k - 1] += static_cast<double>(k) * q[k];
      for (std::size_t k = 0; k < q.size(); ++k) next[k + 1] -= 2.0 * a * q[k];
      q = std::move(next);
    }
    total += w * eval_poly(q, s0) * std::exp(-a * s0 * s0);
    std::size_t d = 0;
    while (d < dims && ++idx[d] == rule.nodes.size()) idx[d++] = 0;
    if (d == dims) break;
  }
  return total;
}

std::map<SuperMonomial, std::complex<double>> direct_pass(const std::vector<std::pair<int, Element>>& layers,
                                                          double a, const std::vector<double>& u, double norm,
                                                          double p, int nodes) {
  const QuadratureRule rule = gauss_hermite(nodes);
  std::map<SuperMonomial, std::complex<double>> out;
  const double s0 = p / norm;
  for (const auto& [j, e] : layers) {
    const double scale = 1.0 / std::pow(norm, j + 1);
    std::map<std::vector<int>, std::map<SuperMonomial, std::complex<double>>> grouped;
    for (const auto& [mono, c] : e.terms()) {
      std::vector<int> beta(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) beta[i] = mono.bos[i];
      SuperMonomial channel = mono;
      channel.bos = {};
      grouped[beta][channel] += c.to_complex();
    }
    for (const auto& [beta, channels] : grouped) {
      const double v = hyperplane_moment(beta, j, a, u, s0, rule) * scale;
      for (const auto& [ch, c] : channels) out[ch] += c * v;
    }
  }
  return out;
}

}  // namespace

double relative_disagreement(const std::map<SuperMonomial, std::complex<double>>& a,
                             const std::map<SuperMonomial, std::complex<double>>& b) {
  double size = 0, diff = 0;
  std::map<SuperMonomial, std::complex<double>> delta = a;
  for (const auto& [k, v] : b) delta[k] -= v;
  for (const auto& [k, v] : a) size = std::max(size, std::abs(v));
  for (const auto& [k, v] : b) size = std::max(size, std::abs(v));
  for (const auto& [k, v] : delta) diff = std::max(diff, std::abs(v));
  return diff / std::max(1.0, size);
}

NumericChannels radon_direct_numeric(const GaussianClassFunction& f, const std::vector<Rational>& y_bos,
                                     const Rational& p, const RadonQuadSpec& spec) {
  require_integrable(f);
  if (spec.nodes < 1 || spec.refine < 1 || !(spec.tolerance > 0)) throw std::invalid_argument("bad quadrature spec");
  const SpaceSignature& space = f.space();
  if (static_cast<int>(y_bos.size()) != space.m) throw IndexError("direction must have m components");
  std::vector<double> u;
  double norm2 = 0;
  for (const auto& v : y_bos) {
    u.push_back(v.get_d());
    norm2 += v.get_d() * v.get_d();
  }
  if (norm2 == 0) throw DegenerateDirection("Radon direction y_b is zero");
  const double norm = std::sqrt(norm2);
  for (double& x : u) x /= norm;

  // delta(<x,y> + p) = sum_j delta^{(j)}(<x_b,y_b> + p) <x`,y`>^j / j!
  const SpaceSignature doubled = space.with_doubling(true);
  const HyperplaneDistribution hyper = expand_hyperplane(y_bos, p, doubled);
  const Element g = fermionic_part(f).embedded_in(doubled);
  std::vector<std::pair<int, Element>> layers;
  for (const auto& [j, weight] : hyper.terms) {
    const Element b = berezin(mul(weight, g));
    if (!b.is_zero()) layers.emplace_back(j, undouble(b, space));
  }
  const double a = f.bos_rate.get_d();
  NumericChannels out;
  out.values = direct_pass(layers, a, u, norm, p.get_d(), spec.nodes);
  const auto fine = direct_pass(layers, a, u, norm, p.get_d(), spec.nodes + spec.refine);
  out.error = relative_disagreement(out.values, fine);
  if (out.error > spec.tolerance) {
    throw QuadratureFailure("hyperplane quadrature error estimate " + std::to_string(out.error) + " exceeds tolerance");
  }
  out.values = fine;
  return out;
}

}  // namespace supercalc
