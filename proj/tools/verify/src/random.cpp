#include "supercalc/verify/random.hpp"

#include <algorithm>
#include <numeric>

namespace supercalc::verify {

RandomOptions scalar_polynomials(int max_degree) {
  RandomOptions opt;
  opt.max_degree = max_degree;
  opt.clifford = false;
  opt.weyl_bound = 0;
  return opt;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int ElementGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational ElementGenerator::coefficient() {
  int num = uniform(1, 9);
  if (uniform(0, 1) == 0) num = -num;
  return make_rational(num, uniform(1, 4));
}

SuperMonomial ElementGenerator::monomial(const RandomOptions& opt) {
  const int nf = 2 * space_.n;
  SuperMonomial mono;
  int degree = opt.homogeneous ? opt.max_degree : uniform(opt.min_degree, opt.max_degree);
  if (opt.fermionic_only) degree = std::min(degree, nf);
  const int ferm_count = opt.fermionic_only ? degree : uniform(0, std::min(degree, nf));
  std::vector<int> idx(static_cast<std::size_t>(nf));
  std::iota(idx.begin(), idx.end(), 0);
  for (int k = 0; k < ferm_count; ++k) {
    const int pick = uniform(k, nf - 1);
    std::swap(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(pick)]);
    mono.ferm |= static_cast<std::uint16_t>(1u << idx[static_cast<std::size_t>(k)]);
  }
  if (!opt.fermionic_only) {
    for (int k = 0; k < degree - ferm_count; ++k) ++mono.bos[static_cast<std::size_t>(uniform(0, space_.m - 1))];
    if (opt.clifford) mono.cliff = static_cast<std::uint8_t>(uniform(0, (1 << space_.m) - 1));
    if (opt.weyl_bound > 0 && nf > 0) {
      const int w = uniform(0, opt.weyl_bound);
      for (int k = 0; k < w; ++k) ++mono.weyl[static_cast<std::size_t>(uniform(0, nf - 1))];
    }
  }
  return mono;
}

Element ElementGenerator::element(const RandomOptions& opt) {
  Element out(space_);
  const int terms = uniform(1, std::max(1, opt.max_terms));
  for (int k = 0; k < terms; ++k) {
    const SuperMonomial mono = monomial(opt);
    out.add_term(mono, Scalar(coefficient()));
  }
  return out;
}

}  // namespace supercalc::verify
