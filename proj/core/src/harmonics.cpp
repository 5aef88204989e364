#include "supercalc/harmonics.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "supercalc/errors.hpp"
#include "supercalc/integration.hpp"
#include "supercalc/linalg.hpp"
#include "supercalc/operators.hpp"

namespace supercalc {

namespace {

void bosonic_exponents(int m, int total, std::vector<std::array<std::uint8_t, kMaxBosonic>>& out) {
  std::array<std::uint8_t, kMaxBosonic> cur{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a);
      rec(i + 1, left - a);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, total);
}

GaussRational rational_entry(const Scalar& s) {
  if (s.is_zero()) return GaussRational();
  if (s.terms().size() != 1 || s.terms()[0].first != 0) {
    throw InternalInconsistency("operator matrix entry is not a Gaussian rational");
  }
  return s.terms()[0].second;
}

// Kernel of `op` restricted to span(columns).
GradedBasis kernel_of(const std::vector<SuperMonomial>& columns, const SpaceSignature& space,
                      const std::function<Element(const Element&)>& op, int degree) {
  std::map<SuperMonomial, SparseRow<GaussRational>> rows;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Element image = op(Element::monomial(space, columns[c]));
    for (const auto& [mono, coef] : image.terms()) {
      rows[mono].emplace(static_cast<int>(c), rational_entry(coef));
    }
  }
  std::vector<SparseRow<GaussRational>> matrix;
  matrix.reserve(rows.size());
  for (auto& [mono, row] : rows) matrix.push_back(std::move(row));
  const auto rref = row_reduce(std::move(matrix), static_cast<int>(columns.size()));
  GradedBasis basis;
  basis.degree = degree;
  for (const auto& vec : kernel_basis(rref)) {
    Element e(space);
    for (const auto& [c, v] : vec) e.add_term(columns[static_cast<std::size_t>(c)], Scalar(v));
    basis.vectors.push_back(std::move(e));
  }
  return basis;
}

std::vector<SuperMonomial> with_words(const std::vector<SuperMonomial>& monos, const std::vector<SuperMonomial>& words) {
  std::vector<SuperMonomial> out;
  out.reserve(monos.size() * words.size());
  for (const auto& mono : monos) {
    for (const auto& w : words) {
      SuperMonomial mm = mono;
      mm.cliff = w.cliff;
      mm.weyl = w.weyl;
      out.push_back(mm);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rank of a Scalar matrix whose rows each carry a single power of pi.
int scalar_matrix_rank(const std::vector<std::vector<Scalar>>& matrix) {
  std::vector<SparseRow<GaussRational>> rows;
  int cols = 0;
  for (const auto& row : matrix) {
    cols = std::max(cols, static_cast<int>(row.size()));
    std::optional<int> exponent;
    SparseRow<GaussRational> r;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Scalar& s = row[c];
      if (s.is_zero()) continue;
      if (s.terms().size() != 1 || (exponent && *exponent != s.terms()[0].first)) {
        throw InternalInconsistency("matrix row mixes powers of pi");
      }
      exponent = s.terms()[0].first;
      r.emplace(static_cast<int>(c), s.terms()[0].second);
    }
    rows.push_back(std::move(r));
  }
  return matrix_rank(std::move(rows), cols);
}

Scalar constant_part(const Element& value) {
  for (const auto& [mono, c] : value.terms()) {
    if (mono == SuperMonomial{}) return c;
  }
  return Scalar();
}

}  // namespace

std::vector<SuperMonomial> monomial_basis(int k, const SpaceSignature& space) {
  std::vector<SuperMonomial> out;
  if (k < 0) return out;
  const int nf = 2 * space.n;
  for (int a = 0; a <= k; ++a) {
    const int fdeg = k - a;
    if (fdeg > nf) continue;
    std::vector<std::array<std::uint8_t, kMaxBosonic>> exps;
    bosonic_exponents(space.m, a, exps);
    for (unsigned mask = 0; mask < (1u << nf); ++mask) {
      if (std::popcount(mask) != fdeg) continue;
      for (const auto& e : exps) {
        SuperMonomial mono;
        mono.bos = e;
        mono.ferm = static_cast<std::uint16_t>(mask);
        out.push_back(mono);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SuperMonomial> word_basis(const SpaceSignature& space, int weyl_bound) {
  std::vector<SuperMonomial> out;
  const int g = 2 * space.n;
  std::vector<std::array<std::uint8_t, 2 * kMaxPairs>> weyls;
  std::array<std::uint8_t, 2 * kMaxPairs> cur{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == g) {
      weyls.push_back(cur);
      return;
    }
    for (int b = 0; b <= left; ++b) {
      cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b);
      rec(i + 1, left - b);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, std::max(weyl_bound, 0));
  for (unsigned c = 0; c < (1u << space.m); ++c) {
    for (const auto& w : weyls) {
      SuperMonomial mono;
      mono.cliff = static_cast<std::uint8_t>(c);
      mono.weyl = w;
      out.push_back(mono);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedBasis harmonic_basis(int k, const SpaceSignature& space) {
  return kernel_of(monomial_basis(k, space), space, [](const Element& e) { return laplace(e); }, k);
}

GradedBasis bosonic_harmonic_basis(int k, const SpaceSignature& space) {
  std::vector<SuperMonomial> cols;
  for (const auto& mono : monomial_basis(k, space)) {
    if (mono.ferm == 0) cols.push_back(mono);
  }
  return kernel_of(cols, space, [](const Element& e) { return classical_laplacian(e); }, k);
}

GradedBasis fermionic_harmonic_basis(int k, const SpaceSignature& space) {
  std::vector<SuperMonomial> cols;
  for (const auto& mono : monomial_basis(k, space)) {
    if (mono.bos_degree() == 0) cols.push_back(mono);
  }
  return kernel_of(cols, space, [](const Element& e) { return laplace_fermionic(e); }, k);
}

GradedBasis monogenic_basis(int k, const SpaceSignature& space, int weyl_bound) {
  if (weyl_bound < 1 && space.n > 0) throw std::invalid_argument("weyl_bound must be at least 1");
  const auto cols = with_words(monomial_basis(k, space), word_basis(space, weyl_bound));
  return kernel_of(cols, space, [](const Element& e) { return dirac_left(e); }, k);
}

long classical_harmonic_dimension(int k, int m) {
  if (k < 0) return 0;
  const auto a = binomial(k + m - 1, m - 1);
  const auto b = (k >= 2) ? binomial(k + m - 3, m - 1) : Rational(0);
  return Rational(a - b).get_num().get_si();
}

long fermionic_harmonic_dimension(int k, int n) {
  if (k < 0 || k > n) return 0;
  return Rational(binomial(2 * n, k) - binomial(2 * n, k - 2)).get_num().get_si();
}

long expected_harmonic_dimension(int k, const SpaceSignature& space) {
  const int m = space.m, n = space.n;
  long total = 0;
  for (int i = 0; i <= std::min(n, k); ++i) {
    total += classical_harmonic_dimension(k - i, m) * fermionic_harmonic_dimension(i, n);
  }
  for (int j = 0; j <= std::min(n, k - 1) - 1; ++j) {
    for (int l = 1; l <= std::min(n - j, (k - j) / 2); ++l) {
      total += classical_harmonic_dimension(k - 2 * l - j, m) * fermionic_harmonic_dimension(j, n);
    }
  }
  return total;
}

long classical_monogenic_dimension(int k, int m) {
  if (k < 0) return 0;
  if (m == 1) return k == 0 ? 2 : 0;
  return (1L << m) * binomial(k + m - 2, m - 2).get_num().get_si();
}

Element f_kpq(int k, int p, int q, const SpaceSignature& space) {
  const int n = space.n;
  if (k < 0 || p < 0 || q < 0 || !(q < n) || !(k < n - q + 1)) {
    throw IndexError("f_{k,p,q} needs q < n and k < n - q + 1");
  }
  const Element xb2 = bosonic_square(space);
  const Element xf2 = fermionic_square(space);
  Element out(space);
  for (int s = 0; s <= k; ++s) {
    const Scalar coef = Scalar(binomial(k, s) * factorial(n - q - s)) *
                        recip_gamma_half(HalfInt{space.m + 2 * p + 2 * k - 2 * s});
    if (coef.is_zero()) continue;
    out += mul(power(xb2, k - s), power(xf2, s)) * coef;
  }
  return out;
}

namespace {

std::vector<std::pair<int, Element>> fischer_rec(const Element& f, int k) {
  if (f.is_zero()) return {};
  const Element lap = laplace(f);
  if (lap.is_zero()) return {{0, f}};
  const int superdim = f.space().superdimension();
  const Element x2 = x_squared(f.space());
  std::vector<std::pair<int, Element>> out;
  Element rest = f;
  for (const auto& [j, h_prime] : fischer_rec(lap, k - 2)) {
    const int big_j = j + 1;
    const long denom = 2L * big_j * (2L * k - 2L * big_j + superdim - 2);
    if (denom == 0) throw UnsupportedSuperdimension("Fischer decomposition breaks down");
    Element h = h_prime * Scalar(make_rational(1, denom));
    rest -= mul(power(x2, big_j), h);
    out.emplace_back(big_j, std::move(h));
  }
  if (!rest.is_zero()) out.insert(out.begin(), {0, rest});
  return out;
}

}  // namespace

std::vector<std::pair<int, Element>> fischer_project(const Element& f) {
  const int superdim = f.space().superdimension();
  if (superdim <= 0 && superdim % 2 == 0) {
    throw UnsupportedSuperdimension("Fischer decomposition needs M outside -2N (M = " + std::to_string(superdim) + ")");
  }
  if (f.is_zero()) return {};
  const int k = f.max_variable_degree();
  if (!(f.homogeneous_part(k) == f)) throw std::invalid_argument("Fischer projection needs a homogeneous input");
  return fischer_rec(f, k);
}

bool divisible_by_x_squared(const Element& f) {
  const SpaceSignature& space = f.space();
  if (f.is_zero()) return true;
  const Element x2 = x_squared(space);
  // group by (degree, word)
  std::map<std::pair<int, SuperMonomial>, Element> parts;
  for (const auto& [mono, c] : f.terms()) {
    auto key = std::make_pair(mono.variable_degree(space), mono.word());
    auto [it, inserted] = parts.try_emplace(key, Element(space));
    it->second.add_term(mono, c);
  }
  for (const auto& [key, part] : parts) {
    const int d = key.first;
    if (d < 2) return false;
    std::vector<SuperMonomial> cols = monomial_basis(d - 2, space);
    std::map<SuperMonomial, SparseRow<GaussRational>> rows;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      SuperMonomial mm = cols[c];
      mm.cliff = key.second.cliff;
      mm.weyl = key.second.weyl;
      const Element image = mul(x2, Element::monomial(space, mm));
      for (const auto& [mono, coef] : image.terms()) rows[mono].emplace(static_cast<int>(c), rational_entry(coef));
    }
    for (const auto& [mono, coef] : part.terms()) rows.try_emplace(mono);
    std::vector<SparseRow<GaussRational>> a;
    std::vector<GaussRational> b;
    // Entries of f may carry powers of pi; divide by a common one.
    std::optional<int> exponent;
    for (const auto& [mono, coef] : part.terms()) {
      if (coef.terms().size() != 1 || (exponent && *exponent != coef.terms()[0].first)) {
        throw InternalInconsistency("divisibility test needs a single power of pi");
      }
      exponent = coef.terms()[0].first;
    }
    for (auto& [mono, row] : rows) {
      a.push_back(row);
      const Scalar c = part.coefficient(mono);
      b.push_back(c.is_zero() ? GaussRational() : c.terms()[0].second);
    }
    if (!solve(a, b, static_cast<int>(cols.size()))) return false;
  }
  return true;
}

IntegrationSpace integration_space(const SpaceSignature& space, int max_degree) {
  const int n = space.n;
  if (max_degree < 2 * n + 2) {
    throw DegreeTooLow("integration space needs degree bound >= 2n + 2 = " + std::to_string(2 * n + 2));
  }
  IntegrationSpace out;
  // unknowns v_{a,b}, 0 <= b <= n, 2a + 2b <= d
  std::map<std::pair<int, int>, int> index;
  for (int b = 0; b <= n; ++b) {
    for (int a = 0; 2 * a + 2 * b <= max_degree; ++a) index.emplace(std::make_pair(a, b), 0);
  }
  int next = 0;
  for (auto& [key, idx] : index) idx = next++;
  std::vector<SparseRow<Rational>> constraints;
  std::vector<std::pair<int, int>> constraint_keys;
  for (const auto& [key, idx] : index) {
    const auto [a, b] = key;
    if (2 * (a + b) + 2 > max_degree) continue;
    SparseRow<Rational> row;
    row[idx] += 1;
    row[index.at({a + 1, b})] += 1;
    if (b + 1 <= n) row[index.at({a, b + 1})] += 1;
    constraints.push_back(row);
    constraint_keys.push_back(key);
  }
  const int unknowns = next;
  out.solution_dimension = unknowns - matrix_rank(constraints, unknowns);
  auto pinned = constraints;
  for (int b = 0; b <= n; ++b) pinned.push_back(SparseRow<Rational>{{index.at({0, b}), Rational(1)}});
  out.determined_by_fermionic_powers = matrix_rank(pinned, unknowns) == unknowns;

  const Element xb2 = bosonic_square(space);
  const Element xf2 = fermionic_square(space);
  bool ok = true;
  std::vector<std::vector<Scalar>> fermionic_values;
  for (int k = 0; k <= n; ++k) {
    FunctionalTable table;
    table.space = space;
    table.max_degree = max_degree;
    for (const auto& [key, idx] : index) {
      const Element mono = mul(power(xb2, key.first), power(xf2, key.second));
      table.values[key] = constant_part(phi_k(mono, k));
    }
    for (const auto& key : constraint_keys) {
      const auto [a, b] = key;
      Scalar sum = table.values.at(key) + table.values.at({a + 1, b});
      if (b + 1 <= n) sum += table.values.at({a, b + 1});
      if (!sum.is_zero()) ok = false;
    }
    std::vector<Scalar> row;
    for (int b = 0; b <= n; ++b) row.push_back(table.values.at({0, b}));
    fermionic_values.push_back(std::move(row));
    out.basis.push_back(std::move(table));
  }
  out.basis_satisfies_constraints = ok;
  out.basis_rank = scalar_matrix_rank(fermionic_values);
  return out;
}

UniquenessReport uniqueness_check(const SpaceSignature& space) {
  UniquenessReport rep;
  rep.space = space;
  const int superdim = space.superdimension();
  const int n = space.n;
  rep.pole_case = superdim <= 0 && superdim % 2 == 0;
  rep.t = superdim < 0 ? (-superdim + 1) / 2 : 0;
  const int p = rep.t + 1;

  const GradedBasis hb = bosonic_harmonic_basis(p, space);
  if (hb.vectors.empty()) throw InternalInconsistency("no bosonic harmonic of the required degree");
  const Element& h = hb.vectors.front();
  Scalar norm;
  for (const auto& [alpha, part] : split_bosonic(mul(h, h))) {
    norm += sphere_moment(alpha, space.m) * constant_part(part);
  }

  std::vector<Element> fs;
  if (n > 0) {
    for (int k = 0; k <= n; ++k) fs.push_back(f_kpq(k, p, 0, space));
  }
  bool ok = true;
  for (int k = 1; k <= n; ++k) {
    UniquenessEntry e;
    e.k = k;
    const Element fh = mul(fs[static_cast<std::size_t>(k)], h);
    e.c_k = constant_part(pizzetti_supersphere(mul(fh, fh))) * norm.inverse();
    e.c_k_nonzero = !e.c_k.is_zero();
    e.not_divisible = !divisible_by_x_squared(fs[static_cast<std::size_t>(k)]);
    Scalar alt;
    for (int s = 0; s <= k; ++s) {
      Scalar a_s = Scalar(binomial(k, s) * factorial(n - s)) * recip_gamma_half(HalfInt{space.m + 2 * p + 2 * k - 2 * s});
      alt += (k - s) % 2 == 0 ? a_s : -a_s;
    }
    e.not_divisible_bivariate = !alt.is_zero();
    ok = ok && e.c_k_nonzero && e.not_divisible && e.not_divisible_bivariate;
    rep.entries.push_back(std::move(e));
  }

  if (n == 0) {
    rep.solution_dimension = 1;
    rep.basis_rank = 1;
  } else {
    // phi = sum_j a_j Int f_j . ; constraints phi(H f_k H) = 0 for k >= 1
    std::vector<std::vector<Scalar>> a;
    for (int k = 1; k <= n; ++k) {
      const Element probe = mul(h, mul(fs[static_cast<std::size_t>(k)], h));
      std::vector<Scalar> row;
      for (int j = 0; j <= n; ++j) {
        row.push_back(constant_part(pizzetti_supersphere(mul(fs[static_cast<std::size_t>(j)], probe))));
      }
      a.push_back(std::move(row));
    }
    rep.solution_dimension = (n + 1) - scalar_matrix_rank(a);
    const Element xf2 = fermionic_square(space);
    std::vector<std::vector<Scalar>> basis;
    for (int j = 0; j <= n; ++j) {
      std::vector<Scalar> row;
      for (int b = 0; b <= n; ++b) {
        row.push_back(constant_part(pizzetti_supersphere(mul(fs[static_cast<std::size_t>(j)], power(xf2, b)))));
      }
      basis.push_back(std::move(row));
    }
    rep.basis_rank = scalar_matrix_rank(basis);
  }
  rep.passed = ok && rep.solution_dimension == 1 && rep.basis_rank == n + 1;
  return rep;
}

}  // namespace supercalc
