#include "supercalc/operators.hpp"

#include <bit>
#include <map>
#include <tuple>

#include "supercalc/errors.hpp"

namespace supercalc {

Element bos_partial(const Element& f, int i) {
  const SpaceSignature& space = f.space();
  if (i < 1 || i > space.m) throw IndexError("bosonic partial index out of range");
  const auto k = static_cast<std::size_t>(i - 1);
  Element out(space);
  for (const auto& [mono, c] : f.terms()) {
    const int a = mono.bos[k];
    if (a == 0) continue;
    SuperMonomial mm = mono;
    mm.bos[k] = static_cast<std::uint8_t>(a - 1);
    out.add_term(mm, c * Scalar(static_cast<long>(a)));
  }
  return out;
}

namespace {

Element ferm_partial(const Element& f, int j, bool left) {
  const SpaceSignature& space = f.space();
  if (j < 1 || j > space.ferm_vars()) throw IndexError("fermionic partial index out of range");
  const unsigned bit = 1u << (j - 1);
  Element out(space);
  for (const auto& [mono, c] : f.terms()) {
    if ((mono.ferm & bit) == 0) continue;
    // number of variables before / after position of j
    const int before = std::popcount(static_cast<unsigned>(mono.ferm) & (bit - 1));
    const int after = std::popcount(static_cast<unsigned>(mono.ferm)) - before - 1;
    const int sign_exp = left ? before : after;
    SuperMonomial mm = mono;
    mm.ferm = static_cast<std::uint16_t>(mono.ferm & ~bit);
    out.add_term(mm, sign_exp % 2 == 0 ? c : -c);
  }
  return out;
}

}  // namespace

Element ferm_partial_left(const Element& f, int j) { return ferm_partial(f, j, true); }
Element ferm_partial_right(const Element& f, int j) { return ferm_partial(f, j, false); }

Element ferm_dirac_left(const Element& f) {
  const SpaceSignature& space = f.space();
  Element out(space);
  for (int j = 1; j <= space.n; ++j) {
    const Element d_odd = ferm_partial_left(f, 2 * j - 1);
    const Element d_even = ferm_partial_left(f, 2 * j);
    if (!d_odd.is_zero()) out += mul(Element::weyl(space, 2 * j), d_odd);
    if (!d_even.is_zero()) out -= mul(Element::weyl(space, 2 * j - 1), d_even);
  }
  return out * Scalar(2);
}

Element ferm_dirac_right(const Element& f) {
  const SpaceSignature& space = f.space();
  Element out(space);
  for (int j = 1; j <= space.n; ++j) {
    const Element d_odd = ferm_partial_right(f, 2 * j - 1);
    const Element d_even = ferm_partial_right(f, 2 * j);
    if (!d_odd.is_zero()) out += mul(d_odd, Element::weyl(space, 2 * j));
    if (!d_even.is_zero()) out -= mul(d_even, Element::weyl(space, 2 * j - 1));
  }
  return out * Scalar(2);
}

Element bos_dirac_left(const Element& f) {
  const SpaceSignature& space = f.space();
  Element out(space);
  for (int i = 1; i <= space.m; ++i) {
    const Element d = bos_partial(f, i);
    if (!d.is_zero()) out += mul(Element::clifford(space, i), d);
  }
  return out;
}

Element bos_dirac_right(const Element& f) {
  const SpaceSignature& space = f.space();
  Element out(space);
  for (int i = 1; i <= space.m; ++i) {
    const Element d = bos_partial(f, i);
    if (!d.is_zero()) out += mul(d, Element::clifford(space, i));
  }
  return out;
}

Element dirac_left(const Element& f) { return ferm_dirac_left(f) - bos_dirac_left(f); }

Element dirac_right(const Element& f) { return -ferm_dirac_right(f) - bos_dirac_right(f); }

Element classical_laplacian(const Element& f) {
  Element out(f.space());
  for (int i = 1; i <= f.space().m; ++i) out += bos_partial(bos_partial(f, i), i);
  return out;
}

Element laplace_bosonic(const Element& f) { return -classical_laplacian(f); }

Element laplace_fermionic(const Element& f) {
  Element out(f.space());
  for (int j = 1; j <= f.space().n; ++j) {
    out += ferm_partial_left(ferm_partial_left(f, 2 * j), 2 * j - 1);
  }
  return out * Scalar(4);
}

Element laplace(const Element& f) { return laplace_fermionic(f) + laplace_bosonic(f); }

Element euler(const Element& f) {
  Element out(f.space());
  for (const auto& [mono, c] : f.terms()) {
    const int d = mono.variable_degree(f.space());
    if (d != 0) out.add_term(mono, c * Scalar(static_cast<long>(d)));
  }
  return out;
}

Element gamma_op(const Element& f) { return mul(vector_x(f.space()), dirac_left(f)) - euler(f); }

Element laplace_beltrami(const Element& f) {
  const Element g = gamma_op(f);
  return g * Scalar(static_cast<long>(f.space().superdimension() - 2)) - gamma_op(g);
}

Element apply(const OperatorKind& op, const Element& f) {
  switch (op.tag) {
    case OpTag::DiracLeft: return dirac_left(f);
    case OpTag::DiracRight: return dirac_right(f);
    case OpTag::Laplace: return laplace(f);
    case OpTag::Euler: return euler(f);
    case OpTag::GammaOp: return gamma_op(f);
    case OpTag::LaplaceBeltrami: return laplace_beltrami(f);
    case OpTag::FermPartial: return ferm_partial_left(f, op.index);
    case OpTag::BosPartial: return bos_partial(f, op.index);
  }
  throw std::logic_error("unhandled operator");
}

// ---------------------------------------------------------------------------
// Dirac preimage

namespace {

// Antiderivative in x_1.
Element integrate_x1(const Element& f) {
  Element out(f.space());
  for (const auto& [mono, c] : f.terms()) {
    SuperMonomial mm = mono;
    const int a = mono.bos[0] + 1;
    mm.bos[0] = static_cast<std::uint8_t>(a);
    out.add_term(mm, c * Scalar(make_rational(1, a)));
  }
  return out;
}

// sum_{j >= 2} d_j^2
Element transverse_laplacian(const Element& f) {
  Element out(f.space());
  for (int i = 2; i <= f.space().m; ++i) out += bos_partial(bos_partial(f, i), i);
  return out;
}

// Phi with classical Laplacian equal to -p, for a purely bosonic polynomial p:
// Phi = sum_k (-1)^{k+1} I_1^{2k+2} (Delta')^k p.
Element classical_poisson_neg(const Element& p) {
  Element out(p.space());
  Element layer = p;
  int k = 0;
  while (!layer.is_zero()) {
    Element term = layer;
    for (int r = 0; r < 2 * k + 2; ++r) term = integrate_x1(term);
    out += (k % 2 == 0) ? -term : term;
    layer = transverse_laplacian(layer);
    ++k;
  }
  return out;
}

}  // namespace

Element dirac_preimage(const Element& h, int max_degree) {
  const SpaceSignature& space = h.space();
  if (h.max_variable_degree() > max_degree) {
    throw NoSolution("input degree " + std::to_string(h.max_variable_degree()) + " exceeds bound " +
                     std::to_string(max_degree));
  }
  Element g(space);
  Element residual = h;
  const std::uint16_t xmask = space.x_ferm_mask();
  for (int round = 0; round <= 2 * space.n + 1 && !residual.is_zero(); ++round) {
    int top = -1;
    for (const auto& [mono, c] : residual.terms()) {
      top = std::max(top, std::popcount(static_cast<unsigned>(mono.ferm & xmask)));
    }
    // group the top fermionic layer by (fermionic set, generator word)
    std::map<SuperMonomial, Element> groups;
    for (const auto& [mono, c] : residual.terms()) {
      if (std::popcount(static_cast<unsigned>(mono.ferm & xmask)) != top) continue;
      SuperMonomial key = mono.word();
      key.ferm = mono.ferm;
      SuperMonomial bos_part;
      bos_part.bos = mono.bos;
      auto [it, inserted] = groups.try_emplace(key, Element(space));
      it->second.add_term(bos_part, c);
    }
    Element step(space);
    for (const auto& [key, poly] : groups) {
      const Element phi = classical_poisson_neg(poly);
      SuperMonomial ferm_word = key;  // x`_F times the word
      const Element tail = Element::monomial(space, ferm_word);
      for (int i = 1; i <= space.m; ++i) {
        const Element d = bos_partial(phi, i);
        if (d.is_zero()) continue;
        // -(d_i Phi) e_i x`_F w, with e_i x`_F = x`_F e_i
        step -= mul(mul(d, Element::clifford(space, i)), tail);
      }
    }
    g += step;
    residual = h - dirac_left(g);
  }
  if (!residual.is_zero()) throw InternalInconsistency("Dirac preimage sweep did not terminate");
  return g;
}

}  // namespace supercalc
