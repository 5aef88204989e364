#pragma once

// Spherical harmonics and monogenics by exact kernel computation, the
// polynomials f_{k,p,q}, Fischer projection, and the finite-dimensional
// space of supersphere integrations.

#include <map>
#include <utility>
#include <vector>

#include "supercalc/superalgebra.hpp"

namespace supercalc {

struct GradedBasis {
  int degree = 0;
  std::vector<Element> vectors;
  int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Scalar-valued monomials of variable degree k in x_i and x`_j.
std::vector<SuperMonomial> monomial_basis(int k, const SpaceSignature& space);
/// Generator words with every Clifford subset and Weyl degree <= weyl_bound.
std::vector<SuperMonomial> word_basis(const SpaceSignature& space, int weyl_bound);

/// Kernel of Delta on P_k.
GradedBasis harmonic_basis(int k, const SpaceSignature& space);
/// Kernel of the classical Laplacian on bosonic polynomials of degree k,
/// returned inside `space`.
GradedBasis bosonic_harmonic_basis(int k, const SpaceSignature& space);
/// Kernel of Delta_f on homogeneous Grassmann polynomials of degree k.
GradedBasis fermionic_harmonic_basis(int k, const SpaceSignature& space);
/// Kernel of d_x on P_k tensored with words of Weyl degree <= weyl_bound.
GradedBasis monogenic_basis(int k, const SpaceSignature& space, int weyl_bound);

long classical_harmonic_dimension(int k, int m);
long fermionic_harmonic_dimension(int k, int n);
/// Count from the decomposition of H_k into f_{l,p,q} H^b_p (x) H^f_q pieces.
long expected_harmonic_dimension(int k, const SpaceSignature& space);
/// 2^m C(k+m-2, m-2): Clifford-valued monogenics for n = 0.
long classical_monogenic_dimension(int k, int m);

/// f_{k,p,q} = sum_s C(k,s) (n-q-s)! / Gamma(m/2+p+k-s) x_b^{2k-2s} x`^{2s}.
Element f_kpq(int k, int p, int q, const SpaceSignature& space);

/// f = sum_j x^{2j} h_j with h_j harmonic of degree deg(f) - 2j.
std::vector<std::pair<int, Element>> fischer_project(const Element& f);

/// A linear functional on span{x_b^{2a} x`^{2b} : 2a + 2b <= max_degree}.
struct FunctionalTable {
  SpaceSignature space{};
  int max_degree = 0;
  std::map<std::pair<int, int>, Scalar> values;  // (a, b) -> phi(x_b^{2a} x`^{2b})
};

struct IntegrationSpace {
  std::vector<FunctionalTable> basis;  // phi_0 .. phi_n
  int solution_dimension = 0;          // functionals obeying phi(x^2 f) = -phi(f)
  bool determined_by_fermionic_powers = false;
  int basis_rank = 0;                  // rank of [phi_k(x`^{2b})]
  bool basis_satisfies_constraints = false;
};

IntegrationSpace integration_space(const SpaceSignature& space, int max_degree);

struct UniquenessEntry {
  int k = 0;
  Scalar c_k;
  bool c_k_nonzero = false;
  bool not_divisible = false;           // linear-algebra membership test
  bool not_divisible_bivariate = false; // sum a_s (-1)^{k-s} != 0
};

struct UniquenessReport {
  SpaceSignature space{};
  int t = 0;
  bool pole_case = false;  // M in -2N
  std::vector<UniquenessEntry> entries;
  int solution_dimension = 0;
  int basis_rank = 0;
  bool passed = false;
};

UniquenessReport uniqueness_check(const SpaceSignature& space);

/// True if f = x^2 g for some polynomial g.
bool divisible_by_x_squared(const Element& f);

}  // namespace supercalc
