#include "supercalc/distributions.hpp"

#include "supercalc/errors.hpp"
#include "supercalc/operators.hpp"
#include "supercalc/parse.hpp"

namespace supercalc {

std::vector<RadialTerm> RadialDistribution::term_list() const {
  std::vector<RadialTerm> out;
  for (const auto& [key, coeff] : terms_) out.push_back({key.first, key.second, coeff});
  return out;
}

void RadialDistribution::add(int order, const Rational& shift, const Element& coeff) {
  if (order < -1) throw std::invalid_argument("distribution order must be >= -1");
  if (!(coeff.space() == space_)) throw SpaceMismatch("coefficient lives in another space");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{order, shift}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadialDistribution& RadialDistribution::operator+=(const RadialDistribution& o) {
  if (!(o.space_ == space_)) throw SpaceMismatch("distributions live in different spaces");
  for (const auto& [key, coeff] : o.terms_) add(key.first, key.second, coeff);
  return *this;
}

RadialDistribution& RadialDistribution::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= s;
  return *this;
}

RadialDistribution left_multiply(const Element& a, const RadialDistribution& d) {
  RadialDistribution out(d.space());
  for (const auto& [key, coeff] : d.terms()) out.add(key.first, key.second, mul(a, coeff));
  return out;
}

RadialDistribution expand_radial(RadialKind kind, const Rational& shift, const SpaceSignature& space) {
  space.validate();
  RadialDistribution out(space);
  Element weight = Element::constant(space, Scalar(1));
  const Element xf2 = fermionic_square(space);
  for (int j = 0; j <= space.n; ++j) {
    if (j > 0) weight = mul(weight, xf2) * Scalar(make_rational(1, j));
    const int order = kind == RadialKind::Delta ? j : j - 1;
    out.add(order, shift, weight);
  }
  return out;
}

RadialDistribution dirac_on_radial(const RadialDistribution& d) {
  const SpaceSignature& space = d.space();
  const Element two_xb = vector_x_bosonic(space) * Scalar(2);
  RadialDistribution out(space);
  for (const auto& [key, coeff] : d.terms()) {
    out.add(key.first, key.second, dirac_left(coeff));
    out.add(key.first + 1, key.second, mul(two_xb, coeff));
  }
  return out;
}

IntegralValue pair_radial(const RadialDistribution& d, const Element& f) {
  const SpaceSignature& space = d.space();
  if (space.m < 2) throw UnsupportedDimension("pairing needs m >= 2");
  Element out(space);
  for (const auto& [key, coeff] : d.terms()) {
    const auto radius = rational_sqrt(key.second);
    if (!radius || sgn(*radius) == 0) {
      throw std::invalid_argument("shift " + to_string(key.second) + " is not the square of a positive rational");
    }
    const int order = key.first;
    for (const auto& [alpha, part] : split_bosonic(mul(coeff, f))) {
      int deg = 0;
      for (int a : alpha) deg += a;
      if (order < 0) {
        out += berezin(part) * ball_moment(alpha, space.m, *radius);
        continue;
      }
      const Scalar mom = sphere_moment(alpha, space.m);
      if (mom.is_zero()) continue;
      // (1/2) (d/du)^k u^{t/2} at u = R^2
      const int t = space.m - 2 + deg;
      const Rational ff = falling_factorial(make_rational(t, 2), order);
      if (sgn(ff) == 0) continue;
      const Rational w = ff * rational_pow(*radius, t - 2 * order) / 2;
      out += berezin(part) * (mom * Scalar(w));
    }
  }
  return out;
}

Element fermionic_pairing(const SpaceSignature& space) {
  if (!space.doubled) throw SpaceMismatch("the fermionic pairing needs a doubled space");
  Element out(space);
  for (int j = 1; j <= space.n; ++j) {
    out += mul(Element::fermionic(space, 2 * j - 1), Element::second_fermionic(space, 2 * j));
    out -= mul(Element::fermionic(space, 2 * j), Element::second_fermionic(space, 2 * j - 1));
  }
  return out * Scalar(make_rational(1, 2));
}

HyperplaneDistribution expand_hyperplane(const std::vector<Rational>& y_bos, const Rational& p,
                                         const SpaceSignature& space) {
  if (!space.doubled) throw SpaceMismatch("hyperplane expansion needs a doubled space");
  if (static_cast<int>(y_bos.size()) != space.m) throw IndexError("direction must have m components");
  HyperplaneDistribution out;
  out.space = space;
  out.y_bos = y_bos;
  out.p = p;
  const Element pairing = fermionic_pairing(space);
  Element acc = Element::constant(space, Scalar(1));
  for (int j = 0; j <= 2 * space.n; ++j) {
    if (j > 0) acc = mul(acc, pairing) * Scalar(make_rational(1, j));
    if (acc.is_zero()) break;
    out.terms.emplace(j, acc);
  }
  return out;
}

std::string to_string(const RadialDistribution& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [key, coeff] : d.terms()) {
    if (!out.empty()) out += " + ";
    const std::string arg = "(xb^2 + " + to_string(key.second) + ")";
    std::string dist;
    if (key.first < 0) {
      dist = "H" + arg;
    } else if (key.first == 0) {
      dist = "delta" + arg;
    } else {
      dist = "delta^(" + std::to_string(key.first) + ")" + arg;
    }
    out += "[" + format(coeff) + "] " + dist;
  }
  return out;
}

}  // namespace supercalc
