#pragma once

// Seeded random Elements with small exact coefficients.

#include <cstdint>
#include <random>

#include "supercalc/superalgebra.hpp"

namespace supercalc::verify {

struct RandomOptions {
  int min_degree = 0;
  int max_degree = 3;
  bool homogeneous = false;  // every term of degree max_degree
  int max_terms = 12;
  bool clifford = true;      // random e-words
  int weyl_bound = 2;        // total Weyl degree of the word, 0 disables
  bool fermionic_only = false;  // x` variables only, no generators
};

/// Options for scalar-valued polynomials (no generators).
RandomOptions scalar_polynomials(int max_degree);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class ElementGenerator {
 public:
  ElementGenerator(const SpaceSignature& space, std::uint64_t seed) : space_(space), rng_(seed) {}

  /// Uniform on {-9..9}\{0} divided by a denominator in 1..4.
  Rational coefficient();
  SuperMonomial monomial(const RandomOptions& opt);
  Element element(const RandomOptions& opt);
  int uniform(int lo, int hi);

 private:
  SpaceSignature space_;
  std::mt19937_64 rng_;
};

}  // namespace supercalc::verify
