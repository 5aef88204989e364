#pragma once

// The algebra P (x) C = Alg(x_i, e_i; x`_j, e`_j): commuting variables x_i,
// anticommuting variables x`_j, orthogonal Clifford generators e_i with
// e_i^2 = -1, and symplectic (Weyl) generators e`_j with
// [e`_{2j-1}, e`_{2k}] = delta_jk.
//
// Elements are finite Scalar-linear combinations of canonical monomials
//     x^a  x`_{F}  e_{C}  e`_1^{b_1} ... e`_{2n}^{b_{2n}}
// with F, C ascending index sets.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "supercalc/scalar.hpp"

namespace supercalc {

inline constexpr int kMaxBosonic = 8;
inline constexpr int kMaxPairs = 4;

/// Dimensions of R^{m|2n}. With `doubled` a second anticommuting set y`
/// (indices 2n..4n-1) is appended after x` (indices 0..2n-1).
struct SpaceSignature {
  int m = 1;
  int n = 0;
  bool doubled = false;

  int ferm_vars() const { return doubled ? 4 * n : 2 * n; }
  int superdimension() const { return m - 2 * n; }
  /// Bitmask of the x` variables (excludes the y` set).
  std::uint16_t x_ferm_mask() const { return static_cast<std::uint16_t>((1u << (2 * n)) - 1u); }
  SpaceSignature with_doubling(bool d) const { return {m, n, d}; }
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const SpaceSignature&, const SpaceSignature&) = default;
};

struct SuperMonomial {
  std::array<std::uint8_t, kMaxBosonic> bos{};
  std::uint16_t ferm = 0;  // bit j <-> anticommuting variable j (0-based)
  std::uint8_t cliff = 0;  // bit i <-> e_{i+1}
  std::array<std::uint8_t, 2 * kMaxPairs> weyl{};

  friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;
  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;

  int bos_degree() const;
  int ferm_degree() const;
  /// Degree in the variables x_i and x`_j only (y` excluded).
  int variable_degree(const SpaceSignature& space) const;
  int weyl_degree() const;
  int cliff_degree() const;
  bool has_generators() const;
  bool has_x_variables(const SpaceSignature& space) const;
  /// Same monomial with all variables removed (generator word only).
  SuperMonomial word() const;
  /// Same monomial with the generator word removed.
  SuperMonomial variables() const;
};

class Element {
 public:
  using TermMap = std::map<SuperMonomial, Scalar>;

  Element() = default;
  explicit Element(const SpaceSignature& space);

  static Element constant(const SpaceSignature& space, const Scalar& value);
  static Element monomial(const SpaceSignature& space, const SuperMonomial& mono,
                          const Scalar& coef = Scalar(1));
  /// x_i, 1-based.
  static Element bosonic(const SpaceSignature& space, int i);
  /// x`_j, 1-based.
  static Element fermionic(const SpaceSignature& space, int j);
  /// y`_j, 1-based; requires a doubled space.
  static Element second_fermionic(const SpaceSignature& space, int j);
  /// e_i, 1-based.
  static Element clifford(const SpaceSignature& space, int i);
  /// e`_j, 1-based.
  static Element weyl(const SpaceSignature& space, int j);

  const SpaceSignature& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const SuperMonomial& mono, const Scalar& coef);
  Scalar coefficient(const SuperMonomial& mono) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  /// Largest variable degree among the terms (-1 for zero).
  int max_variable_degree() const;
  int max_weyl_degree() const;
  /// Part of total variable degree exactly k.
  Element homogeneous_part(int k) const;
  /// Value at x = 0: terms free of x_i and x`_j.
  Element at_origin() const;
  /// Same terms reinterpreted in another space; indices must fit.
  Element embedded_in(const SpaceSignature& target) const;
  bool is_variable_free() const;
  /// True if no term carries a generator.
  bool is_scalar_valued() const;

 private:
  SpaceSignature space_{};
  TermMap terms_;
};

/// Exact canonical product; throws SpaceMismatch on differing spaces.
Element mul(const Element& a, const Element& b);
Element power(const Element& a, int k);

/// x = sum x_i e_i + sum x`_j e`_j.
Element vector_x(const SpaceSignature& space);
Element vector_x_bosonic(const SpaceSignature& space);
Element vector_x_fermionic(const SpaceSignature& space);
/// x_b^2 = -sum x_i^2.
Element bosonic_square(const SpaceSignature& space);
/// x`^2 = sum x`_{2j-1} x`_{2j}.
Element fermionic_square(const SpaceSignature& space);
/// x^2 = x_b^2 + x`^2.
Element x_squared(const SpaceSignature& space);

/// Substitute x_i -> factor x_i and x`_j -> factor x`_j.
Element scale_variables(const Element& f, const Rational& factor);

}  // namespace supercalc
