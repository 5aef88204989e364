#include "supercalc/verify/numeric.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "supercalc/errors.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/quadrature.hpp"

namespace supercalc::verify {

namespace {

BosonicClosure polynomial_closure(std::vector<std::pair<std::vector<int>, double>> terms, double rate) {
  return [terms = std::move(terms), rate](const std::vector<double>& x) {
    double v = 0, r2 = 0;
    for (double c : x) r2 += c * c;
    for (const auto& [beta, c] : terms) {
      double t = c;
      for (std::size_t i = 0; i < beta.size(); ++i) t *= std::pow(x[i], beta[i]);
      v += t;
    }
    return v * std::exp(-rate * r2);
  };
}

NumericSuperfunction channelize_with_rate(const Element& poly, double rate) {
  const SpaceSignature& space = poly.space();
  std::map<SuperMonomial, std::vector<std::pair<std::vector<int>, double>>> grouped;
  for (const auto& [mono, c] : poly.terms()) {
    const auto value = c.to_complex();
    if (value.imag() != 0.0) throw std::invalid_argument("numeric oracle expects real coefficients");
    SuperMonomial channel = mono;
    channel.bos = {};
    std::vector<int> beta(static_cast<std::size_t>(space.m));
    for (int i = 0; i < space.m; ++i) beta[static_cast<std::size_t>(i)] = mono.bos[static_cast<std::size_t>(i)];
    grouped[channel].emplace_back(std::move(beta), value.real());
  }
  NumericSuperfunction out;
  out.space = space;
  for (auto& [channel, terms] : grouped) out.channels.emplace_back(channel, polynomial_closure(std::move(terms), rate));
  return out;
}

// Spherical coordinates, trapezoid in the periodic angle.
double product_rule(const BosonicClosure& phi, int m, int nodes) {
  const int polar = m - 2;
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, std::numbers::pi);
  const int az = 2 * nodes;
  std::vector<int> idx(static_cast<std::size_t>(polar), 0);
  std::vector<double> x(static_cast<std::size_t>(m));
  double total = 0;
  for (;;) {
    double w = 1.0, s = 1.0;
    for (int k = 0; k < polar; ++k) {
      const double th = rule.nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
      w *= rule.weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])] * std::pow(std::sin(th), m - 2 - k);
      x[static_cast<std::size_t>(k)] = s * std::cos(th);
      s *= std::sin(th);
    }
    double inner = 0;
    for (int a = 0; a < az; ++a) {
      const double ph = 2.0 * std::numbers::pi * a / az;
      x[static_cast<std::size_t>(m - 2)] = s * std::cos(ph);
      x[static_cast<std::size_t>(m - 1)] = s * std::sin(ph);
      inner += phi(x);
    }
    total += w * inner * (2.0 * std::numbers::pi / az);
    int k = 0;
    while (k < polar && ++idx[static_cast<std::size_t>(k)] == nodes) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == polar) break;
  }
  return total;
}

double monte_carlo(const BosonicClosure& phi, int m, int samples) {
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  std::vector<double> x(static_cast<std::size_t>(m)), y(static_cast<std::size_t>(m));
  double sum = 0;
  for (int s = 0; s < samples; ++s) {
    double r2 = 0;
    for (double& c : x) {
      c = normal(rng);
      r2 += c * c;
    }
    const double r = std::sqrt(r2);
    for (int i = 0; i < m; ++i) {
      x[static_cast<std::size_t>(i)] /= r;
      y[static_cast<std::size_t>(i)] = -x[static_cast<std::size_t>(i)];
    }
    sum += 0.5 * (phi(x) + phi(y));
  }
  const double area = 2.0 * std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0);
  return area * sum / samples;
}

double binomial_d(int n, int k) {
  double v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// j-th derivative of g at u0 by central differences with Richardson
// extrapolation in h^2. Returns value and the last correction as error.
std::pair<double, double> derivative(const std::function<double(double)>& g, double u0, int j, int levels) {
  if (j == 0) return {g(u0), 0.0};
  std::vector<std::vector<double>> table;
  double h = 0.1 * u0;
  for (int l = 0; l < levels; ++l, h /= 2) {
    double d = 0;
    for (int i = 0; i <= j; ++i) {
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      d += sign * binomial_d(j, i) * g(u0 + (0.5 * j - i) * h);
    }
    std::vector<double> row{d / std::pow(h, j)};
    double factor = 4.0;
    for (int k = 1; k <= l; ++k, factor *= 4.0) {
      row.push_back(row[static_cast<std::size_t>(k - 1)] +
                    (row[static_cast<std::size_t>(k - 1)] - table.back()[static_cast<std::size_t>(k - 1)]) / (factor - 1.0));
    }
    table.push_back(std::move(row));
  }
  const auto& last = table.back();
  const double best = last.back();
  const double err = table.size() > 1 ? std::abs(best - table[table.size() - 2].back()) : std::abs(best);
  return {best, err};
}

}  // namespace

NumericSuperfunction channelize(const Element& poly) { return channelize_with_rate(poly, 0.0); }

NumericSuperfunction channelize(const GaussianClassFunction& f) {
  return channelize_with_rate(fermionic_part(f), f.bos_rate.get_d());
}

double sphere_integral(const BosonicClosure& phi, int m, int angular_nodes, int mc_samples) {
  if (m < 2) throw UnsupportedDimension("sphere quadrature needs m >= 2");
  if (m > 4) return monte_carlo(phi, m, mc_samples);
  return product_rule(phi, m, angular_nodes);
}

NumericResult numeric_supersphere(const NumericSuperfunction& f, double radius, const QuadSpec& quad) {
  const SpaceSignature& space = f.space;
  if (space.m < 2) throw UnsupportedDimension("supersphere integrals need m >= 2");
  if (!(radius > 0) || quad.angular_nodes < 1 || quad.difference_levels < 1 || !(quad.tolerance > 0)) {
    throw std::invalid_argument("bad radius or quadrature spec");
  }
  const int m = space.m;
  const double u0 = radius * radius;
  NumericResult out;
  double scale = 0;
  for (const auto& [channel, phi] : f.channels) {
    // b_{j} = Berezin(x`^{2j}/j! x`_S w)
    std::vector<Element> weights;
    for (int j = 0; j <= space.n; ++j) {
      Element w = power(fermionic_square(space), j) * Scalar(Rational(1) / factorial(j));
      weights.push_back(berezin(mul(w, Element::monomial(space, channel))));
    }
    for (int j = 0; j <= space.n; ++j) {
      const Element& b = weights[static_cast<std::size_t>(j)];
      if (b.is_zero()) continue;
      auto g_at = [&](int nodes) {
        return [&, nodes](double u) {
          const double r = std::sqrt(u);
          BosonicClosure scaled = [&](const std::vector<double>& xi) {
            std::vector<double> x(xi);
            for (double& c : x) c *= r;
            return phi(x);
          };
          return std::pow(u, (m - 2) / 2.0) * sphere_integral(scaled, m, nodes, quad.monte_carlo_samples);
        };
      };
      const auto [coarse, diff_err] = derivative(g_at(quad.angular_nodes), u0, j, quad.difference_levels);
      const auto [fine, diff_err2] = derivative(g_at(2 * quad.angular_nodes), u0, j, quad.difference_levels);
      (void)diff_err;
      const double err = std::abs(fine - coarse) + diff_err2;
      for (const auto& [word, c] : b.terms()) {
        const double cv = c.to_complex().real();
        out.values[word] += radius * cv * fine;
        out.error += radius * std::abs(cv) * err;
        scale = std::max(scale, std::abs(out.values[word]));
      }
    }
  }
  if (out.error > quad.tolerance * std::max(1.0, scale)) {
    throw QuadratureFailure("supersphere quadrature error estimate " + std::to_string(out.error) + " exceeds tolerance");
  }
  return out;
}

}  // namespace supercalc::verify
