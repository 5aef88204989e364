#pragma once

// Formal radial and hyperplane distributions with Element coefficients.
// A radial term (k, c, a) stands for a * D_k(x_b^2 + c) where D_{-1} = H is
// the Heaviside function and D_k = delta^{(k)} for k >= 0.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "supercalc/integration.hpp"
#include "supercalc/superalgebra.hpp"

namespace supercalc {

enum class RadialKind { Heaviside, Delta };

struct RadialTerm {
  int order;
  Rational shift;
  Element coeff;
};

class RadialDistribution {
 public:
  using Key = std::pair<int, Rational>;

  RadialDistribution() = default;
  explicit RadialDistribution(const SpaceSignature& space) : space_(space) {}

  const SpaceSignature& space() const { return space_; }
  const std::map<Key, Element>& terms() const { return terms_; }
  std::vector<RadialTerm> term_list() const;
  bool is_zero() const { return terms_.empty(); }

  void add(int order, const Rational& shift, const Element& coeff);
  RadialDistribution& operator+=(const RadialDistribution& o);
  RadialDistribution& operator*=(const Scalar& s);

  friend bool operator==(const RadialDistribution& a, const RadialDistribution& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  SpaceSignature space_{};
  std::map<Key, Element> terms_;
};

/// a * d, coefficient-wise multiplication from the left.
RadialDistribution left_multiply(const Element& a, const RadialDistribution& d);

/// H(x^2 + c) or delta(x^2 + c) expanded in x`^2 up to x`^{2n}.
RadialDistribution expand_radial(RadialKind kind, const Rational& shift, const SpaceSignature& space);

/// d_x applied with (d/du) H = delta and (d/du) delta^{(k)} = delta^{(k+1)}.
RadialDistribution dirac_on_radial(const RadialDistribution& d);

/// Integral over R^{m|2n} of d * f. Shifts must be squares of positive
/// rationals.
IntegralValue pair_radial(const RadialDistribution& d, const Element& f);

struct HyperplaneDistribution {
  SpaceSignature space{};
  std::vector<Rational> y_bos;
  Rational p;
  /// order j -> <x`,y`>^j / j!
  std::map<int, Element> terms;
};

/// <x`,y`> = (1/2) sum_j (x`_{2j-1} y`_{2j} - x`_{2j} y`_{2j-1}).
Element fermionic_pairing(const SpaceSignature& space);

/// delta(<x,y> + p) = sum_j delta^{(j)}(<x_b,y_b> + p) <x`,y`>^j / j!.
HyperplaneDistribution expand_hyperplane(const std::vector<Rational>& y_bos, const Rational& p,
                                         const SpaceSignature& space);

std::string to_string(const RadialDistribution& d);

}  // namespace supercalc
