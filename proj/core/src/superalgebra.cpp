#include "supercalc/superalgebra.hpp"

#include <bit>
#include <vector>

#include "supercalc/errors.hpp"

namespace supercalc {

void SpaceSignature::validate() const {
  if (m < 1 || m > kMaxBosonic) {
    throw UnsupportedDimension("m must lie in 1.." + std::to_string(kMaxBosonic));
  }
  if (n < 0 || n > kMaxPairs) {
    throw UnsupportedDimension("n must lie in 0.." + std::to_string(kMaxPairs));
  }
}

std::string SpaceSignature::to_string() const {
  std::string s = "(m=" + std::to_string(m) + ", n=" + std::to_string(n);
  if (doubled) s += ", doubled";
  return s + ")";
}

int SuperMonomial::bos_degree() const {
  int d = 0;
  for (auto a : bos) d += a;
  return d;
}

int SuperMonomial::ferm_degree() const { return std::popcount(static_cast<unsigned>(ferm)); }

int SuperMonomial::variable_degree(const SpaceSignature& space) const {
  return bos_degree() + std::popcount(static_cast<unsigned>(ferm & space.x_ferm_mask()));
}

int SuperMonomial::weyl_degree() const {
  int d = 0;
  for (auto b : weyl) d += b;
  return d;
}

int SuperMonomial::cliff_degree() const { return std::popcount(static_cast<unsigned>(cliff)); }

bool SuperMonomial::has_generators() const { return cliff != 0 || weyl_degree() != 0; }

bool SuperMonomial::has_x_variables(const SpaceSignature& space) const {
  return bos_degree() != 0 || (ferm & space.x_ferm_mask()) != 0;
}

SuperMonomial SuperMonomial::word() const {
  SuperMonomial w;
  w.cliff = cliff;
  w.weyl = weyl;
  return w;
}

SuperMonomial SuperMonomial::variables() const {
  SuperMonomial v;
  v.bos = bos;
  v.ferm = ferm;
  return v;
}

// ---------------------------------------------------------------------------

Element::Element(const SpaceSignature& space) : space_(space) { space_.validate(); }

Element Element::constant(const SpaceSignature& space, const Scalar& value) {
  Element e(space);
  e.add_term(SuperMonomial{}, value);
  return e;
}

Element Element::monomial(const SpaceSignature& space, const SuperMonomial& mono, const Scalar& coef) {
  Element e(space);
  e.add_term(mono, coef);
  return e;
}

Element Element::bosonic(const SpaceSignature& space, int i) {
  if (i < 1 || i > space.m) throw IndexError("bosonic index x" + std::to_string(i) + " out of range");
  SuperMonomial mono;
  mono.bos[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(space, mono);
}

Element Element::fermionic(const SpaceSignature& space, int j) {
  if (j < 1 || j > 2 * space.n) throw IndexError("fermionic index q" + std::to_string(j) + " out of range");
  SuperMonomial mono;
  mono.ferm = static_cast<std::uint16_t>(1u << (j - 1));
  return monomial(space, mono);
}

Element Element::second_fermionic(const SpaceSignature& space, int j) {
  if (!space.doubled) throw SpaceMismatch("y variables require a doubled fermionic space");
  if (j < 1 || j > 2 * space.n) throw IndexError("fermionic index y" + std::to_string(j) + " out of range");
  SuperMonomial mono;
  mono.ferm = static_cast<std::uint16_t>(1u << (2 * space.n + j - 1));
  return monomial(space, mono);
}

Element Element::clifford(const SpaceSignature& space, int i) {
  if (i < 1 || i > space.m) throw IndexError("Clifford index e" + std::to_string(i) + " out of range");
  SuperMonomial mono;
  mono.cliff = static_cast<std::uint8_t>(1u << (i - 1));
  return monomial(space, mono);
}

Element Element::weyl(const SpaceSignature& space, int j) {
  if (j < 1 || j > 2 * space.n) throw IndexError("Weyl index w" + std::to_string(j) + " out of range");
  SuperMonomial mono;
  mono.weyl[static_cast<std::size_t>(j - 1)] = 1;
  return monomial(space, mono);
}

void Element::add_term(const SuperMonomial& mono, const Scalar& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Element::coefficient(const SuperMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Scalar() : it->second;
}

static void require_same_space(const Element& a, const Element& b) {
  if (!(a.space() == b.space())) {
    throw SpaceMismatch("operands live in " + a.space().to_string() + " and " + b.space().to_string());
  }
}

Element& Element::operator+=(const Element& o) {
  require_same_space(*this, o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_space(*this, o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

int Element::max_variable_degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.variable_degree(space_));
  return d;
}

int Element::max_weyl_degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.weyl_degree());
  return d;
}

Element Element::homogeneous_part(int k) const {
  Element out(space_);
  for (const auto& [mono, c] : terms_) {
    if (mono.variable_degree(space_) == k) out.terms_.emplace(mono, c);
  }
  return out;
}

Element Element::at_origin() const {
  Element out(space_);
  for (const auto& [mono, c] : terms_) {
    if (!mono.has_x_variables(space_)) out.terms_.emplace(mono, c);
  }
  return out;
}

Element Element::embedded_in(const SpaceSignature& target) const {
  Element out(target);
  const int shift = 2 * target.n - 2 * space_.n;
  for (const auto& [mono, c] : terms_) {
    SuperMonomial mm = mono;
    for (int i = target.m; i < kMaxBosonic; ++i) {
      if (mono.bos[static_cast<std::size_t>(i)] != 0) throw IndexError("bosonic index exceeds target space");
    }
    if (target.m < 8 && (mono.cliff >> target.m) != 0) throw IndexError("Clifford index exceeds target space");
    for (int j = 2 * target.n; j < 2 * kMaxPairs; ++j) {
      if (mono.weyl[static_cast<std::size_t>(j)] != 0) throw IndexError("Weyl index exceeds target space");
    }
    const unsigned xs = mono.ferm & space_.x_ferm_mask();
    const unsigned ys = mono.ferm >> (2 * space_.n);
    if ((xs >> (2 * target.n)) != 0) throw IndexError("fermionic index exceeds target space");
    if (ys != 0) {
      if (!target.doubled || shift < 0) throw IndexError("y variables do not fit target space");
    }
    mm.ferm = static_cast<std::uint16_t>(xs | (ys << (2 * target.n)));
    out.add_term(mm, c);
  }
  return out;
}

bool Element::is_variable_free() const {
  for (const auto& [mono, c] : terms_) {
    if (mono.bos_degree() != 0 || mono.ferm != 0) return false;
  }
  return true;
}

bool Element::is_scalar_valued() const {
  for (const auto& [mono, c] : terms_) {
    if (mono.has_generators()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomial product

namespace {

// Sign of merging two ascending index sets a (left) and b (right): number of
// pairs (i in a, j in b) with i > j.
int merge_inversions(unsigned a, unsigned b) {
  int inv = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    inv += std::popcount(a >> (j + 1));
  }
  return inv;
}

struct WeylTerm {
  std::array<std::uint8_t, 2 * kMaxPairs> exp{};
  Integer coef;
};

// Normal-ordered product of two Weyl words over n pairs.
std::vector<WeylTerm> weyl_product(const std::array<std::uint8_t, 2 * kMaxPairs>& a,
                                   const std::array<std::uint8_t, 2 * kMaxPairs>& b, int n) {
  std::vector<WeylTerm> acc(1);
  acc[0].coef = 1;
  for (int j = 0; j < n; ++j) {
    const int pa = a[2 * j], qa = a[2 * j + 1];
    const int pb = b[2 * j], qb = b[2 * j + 1];
    if (qa == 0 || pb == 0) {
      for (auto& t : acc) {
        t.exp[2 * j] = static_cast<std::uint8_t>(pa + pb);
        t.exp[2 * j + 1] = static_cast<std::uint8_t>(qa + qb);
      }
      continue;
    }
    // q^qa p^pb = sum_k (-1)^k k! C(qa,k) C(pb,k) p^(pb-k) q^(qa-k)
    std::vector<WeylTerm> next;
    const int kmax = std::min(qa, pb);
    next.reserve(acc.size() * static_cast<std::size_t>(kmax + 1));
    for (int k = 0; k <= kmax; ++k) {
      Integer c = factorial(k).get_num() * binomial(qa, k).get_num() * binomial(pb, k).get_num();
      if (k % 2 == 1) c = -c;
      for (const auto& t : acc) {
        WeylTerm u = t;
        u.exp[2 * j] = static_cast<std::uint8_t>(pa + pb - k);
        u.exp[2 * j + 1] = static_cast<std::uint8_t>(qa + qb - k);
        u.coef *= c;
        next.push_back(std::move(u));
      }
    }
    acc = std::move(next);
  }
  for (int j = 2 * n; j < 2 * kMaxPairs; ++j) {
    for (auto& t : acc) t.exp[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(a[j] + b[j]);
  }
  return acc;
}

}  // namespace

Element mul(const Element& a, const Element& b) {
  require_same_space(a, b);
  const SpaceSignature& space = a.space();
  Element out(space);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma.ferm & mb.ferm) != 0) continue;
      int sign_exp = merge_inversions(ma.ferm, mb.ferm);
      // e_{Cb} moves left past the Weyl word of a
      sign_exp += mb.cliff_degree() * ma.weyl_degree();
      sign_exp += merge_inversions(ma.cliff, mb.cliff);
      sign_exp += std::popcount(static_cast<unsigned>(ma.cliff & mb.cliff));

      SuperMonomial base;
      for (int i = 0; i < kMaxBosonic; ++i) {
        base.bos[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(ma.bos[i] + mb.bos[i]);
      }
      base.ferm = static_cast<std::uint16_t>(ma.ferm | mb.ferm);
      base.cliff = static_cast<std::uint8_t>(ma.cliff ^ mb.cliff);

      Scalar coef = ca * cb;
      if (sign_exp % 2 != 0) coef = -coef;

      if (ma.weyl_degree() == 0 || mb.weyl_degree() == 0) {
        for (int j = 0; j < 2 * kMaxPairs; ++j) {
          base.weyl[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(ma.weyl[j] + mb.weyl[j]);
        }
        out.add_term(base, coef);
        continue;
      }
      for (const auto& wt : weyl_product(ma.weyl, mb.weyl, space.n)) {
        SuperMonomial mono = base;
        mono.weyl = wt.exp;
        if (wt.coef == 1) {
          out.add_term(mono, coef);
        } else {
          out.add_term(mono, coef * Scalar(Rational(wt.coef)));
        }
      }
    }
  }
  return out;
}

Element operator*(const Element& a, const Element& b) { return mul(a, b); }

Element power(const Element& a, int k) {
  if (k < 0) throw std::domain_error("negative power of an Element");
  Element result = Element::constant(a.space(), Scalar(1));
  for (int i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

Element vector_x_bosonic(const SpaceSignature& space) {
  Element x(space);
  for (int i = 0; i < space.m; ++i) {
    SuperMonomial mono;
    mono.bos[static_cast<std::size_t>(i)] = 1;
    mono.cliff = static_cast<std::uint8_t>(1u << i);
    x.add_term(mono, Scalar(1));
  }
  return x;
}

Element vector_x_fermionic(const SpaceSignature& space) {
  Element x(space);
  for (int j = 0; j < 2 * space.n; ++j) {
    SuperMonomial mono;
    mono.ferm = static_cast<std::uint16_t>(1u << j);
    mono.weyl[static_cast<std::size_t>(j)] = 1;
    x.add_term(mono, Scalar(1));
  }
  return x;
}

Element vector_x(const SpaceSignature& space) { return vector_x_bosonic(space) + vector_x_fermionic(space); }

Element bosonic_square(const SpaceSignature& space) {
  Element out(space);
  for (int i = 0; i < space.m; ++i) {
    SuperMonomial mono;
    mono.bos[static_cast<std::size_t>(i)] = 2;
    out.add_term(mono, Scalar(-1));
  }
  return out;
}

Element fermionic_square(const SpaceSignature& space) {
  Element out(space);
  for (int j = 0; j < space.n; ++j) {
    SuperMonomial mono;
    mono.ferm = static_cast<std::uint16_t>(3u << (2 * j));
    out.add_term(mono, Scalar(1));
  }
  return out;
}

Element x_squared(const SpaceSignature& space) { return bosonic_square(space) + fermionic_square(space); }

Element scale_variables(const Element& f, const Rational& factor) {
  Element out(f.space());
  for (const auto& [mono, c] : f.terms()) {
    out.add_term(mono, c * Scalar(rational_pow(factor, mono.variable_degree(f.space()))));
  }
  return out;
}

}  // namespace supercalc
