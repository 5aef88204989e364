#include <random>

#include "support.hpp"
#include "supercalc/errors.hpp"
#include "supercalc/verify/random.hpp"

using namespace supercalc;
using test::P;
using test::Q;

namespace {

// Naive rewriting of generator words into canonical order, used as an
// oracle for the product tables.
struct Gen {
  char kind;  // 'e' or 'w'
  int index;
};
struct WordTerm {
  Rational coef;
  std::vector<Gen> word;
};

bool out_of_order(const Gen& a, const Gen& b) {
  if (a.kind != b.kind) return a.kind == 'w';
  if (a.kind == 'e') return a.index >= b.index;
  return a.index > b.index;
}

std::vector<WordTerm> normal_order(std::vector<WordTerm> todo) {
  std::vector<WordTerm> done;
  while (!todo.empty()) {
    WordTerm t = std::move(todo.back());
    todo.pop_back();
    bool clean = true;
    for (std::size_t k = 0; k + 1 < t.word.size(); ++k) {
      const Gen a = t.word[k], b = t.word[k + 1];
      if (!out_of_order(a, b)) continue;
      clean = false;
      if (a.kind == 'e' && b.kind == 'e' && a.index == b.index) {
        t.word.erase(t.word.begin() + static_cast<long>(k), t.word.begin() + static_cast<long>(k) + 2);
        t.coef = -t.coef;
      } else if (a.kind == 'w' && b.kind == 'w' && a.index % 2 == 0 && b.index == a.index - 1) {
        WordTerm contracted = t;
        contracted.word.erase(contracted.word.begin() + static_cast<long>(k),
                              contracted.word.begin() + static_cast<long>(k) + 2);
        contracted.coef = -contracted.coef;
        todo.push_back(std::move(contracted));
        std::swap(t.word[k], t.word[k + 1]);
      } else {
        std::swap(t.word[k], t.word[k + 1]);
        if (!(a.kind == 'w' && b.kind == 'w')) t.coef = -t.coef;
      }
      todo.push_back(std::move(t));
      break;
    }
    if (clean) done.push_back(std::move(t));
  }
  return done;
}

Element to_element(const std::vector<WordTerm>& terms, const SpaceSignature& space) {
  Element out(space);
  for (const auto& t : terms) {
    SuperMonomial mono;
    for (const auto& g : t.word) {
      if (g.kind == 'e') {
        mono.cliff |= static_cast<std::uint8_t>(1u << (g.index - 1));
      } else {
        ++mono.weyl[static_cast<std::size_t>(g.index - 1)];
      }
    }
    out.add_term(mono, Scalar(t.coef));
  }
  return out;
}

}  // namespace

TEST_SUITE("superalgebra") {
  TEST_CASE("relations from the definition") {
    const SpaceSignature s{2, 1, false};
    CHECK(mul(Element::fermionic(s, 1), Element::fermionic(s, 1)).is_zero());
    CHECK(mul(Element::weyl(s, 2), Element::weyl(s, 1)) == P("w1*w2", s) - P("1", s));
    CHECK(mul(Element::clifford(s, 1), Element::clifford(s, 1)) == P("-1", s));
    CHECK(mul(Element::clifford(s, 1), Element::weyl(s, 1)) == -mul(Element::weyl(s, 1), Element::clifford(s, 1)));
    CHECK(mul(Element::fermionic(s, 1), Element::clifford(s, 2)) == mul(Element::clifford(s, 2), Element::fermionic(s, 1)));
  }

  TEST_CASE("square of the vector variable") {
    const SpaceSignature s{3, 1, false};
    const Element x = vector_x(s);
    CHECK(mul(x, x) == P("q1*q2 - x1^2 - x2^2 - x3^2", s));
    CHECK(mul(x, x).is_scalar_valued());
    CHECK(vector_x(SpaceSignature{1, 0, false}) == P("x1*e1", SpaceSignature{1, 0, false}));
    CHECK(vector_x(SpaceSignature{2, 1, false}).size() == 4);
  }

  TEST_CASE("generator products agree with naive rewriting") {
    const SpaceSignature s{3, 2, false};
    std::mt19937 rng(3);
    for (int t = 0; t < 300; ++t) {
      std::vector<Gen> word;
      const int len = std::uniform_int_distribution<int>(0, 6)(rng);
      Element product = Element::constant(s, Scalar(1));
      for (int k = 0; k < len; ++k) {
        const bool e = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
        const Gen g{e ? 'e' : 'w', std::uniform_int_distribution<int>(1, e ? 3 : 4)(rng)};
        word.push_back(g);
        product = mul(product, e ? Element::clifford(s, g.index) : Element::weyl(s, g.index));
      }
      CHECK(product == to_element(normal_order({{Rational(1), word}}), s));
    }
  }

  TEST_CASE("Grassmann products are permutation signs") {
    const SpaceSignature s{1, 3, false};
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
      std::vector<int> idx;
      const int len = std::uniform_int_distribution<int>(0, 5)(rng);
      Element product = Element::constant(s, Scalar(1));
      for (int k = 0; k < len; ++k) {
        idx.push_back(std::uniform_int_distribution<int>(1, 6)(rng));
        product = mul(product, Element::fermionic(s, idx.back()));
      }
      int inversions = 0;
      bool repeated = false;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          inversions += idx[a] > idx[b];
          repeated = repeated || idx[a] == idx[b];
        }
      }
      if (repeated) {
        CHECK(product.is_zero());
        continue;
      }
      SuperMonomial mono;
      for (int i : idx) mono.ferm |= static_cast<std::uint16_t>(1u << (i - 1));
      CHECK(product == Element::monomial(s, mono, Scalar(inversions % 2 == 0 ? 1 : -1)));
    }
  }

  TEST_CASE("associativity, centrality and parity on random elements") {
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 1, false}, SpaceSignature{2, 2, false}}) {
      verify::ElementGenerator gen(s, 17);
      verify::RandomOptions opt;
      opt.max_degree = 2;
      opt.max_terms = 4;
      const Element x2 = x_squared(s);
      for (int t = 0; t < 200; ++t) {
        const Element a = gen.element(opt), b = gen.element(opt), c = gen.element(opt);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(x2, a) == mul(a, x2));
      }
      for (int i = 1; i <= 2 * s.n; ++i) {
        for (int j = 1; j <= 2 * s.n; ++j) {
          if (i == j) continue;
          CHECK(mul(Element::fermionic(s, i), Element::fermionic(s, j)) ==
                -mul(Element::fermionic(s, j), Element::fermionic(s, i)));
        }
      }
      // generator parity of every product term is the sum of the operand parities
      for (int t = 0; t < 50; ++t) {
        const SuperMonomial ma = gen.monomial(opt), mb = gen.monomial(opt);
        const int pa = (ma.cliff_degree() + ma.weyl_degree()) % 2, pb = (mb.cliff_degree() + mb.weyl_degree()) % 2;
        const Element prod = mul(Element::monomial(s, ma), Element::monomial(s, mb));
        for (const auto& [mono, coef] : prod.terms()) {
          CHECK((mono.cliff_degree() + mono.weyl_degree()) % 2 == (pa + pb) % 2);
        }
      }
    }
  }

  TEST_CASE("parse and format") {
    const SpaceSignature s{2, 1, false};
    CHECK(P("q1*q2", s) == Element::monomial(s, [] {
            SuperMonomial m;
            m.ferm = 3;
            return m;
          }()));
    CHECK(P("3/2 * x1^2 * e1", s).size() == 1);
    CHECK(P("3/2 * x1^2 * e1", s).terms().begin()->second == Scalar(Q(3, 2)));
    CHECK(P("q2*q1", s) == -P("q1*q2", s));
    CHECK(P("(x1 + x2)^2", s) == P("x1^2 + 2*x1*x2 + x2^2", s));
    CHECK(P("pi*x1", s) == P("x1", s) * Scalar::pi_power(2));
    CHECK_THROWS_AS(P("x1 + * x2", s), SyntaxError);
    CHECK_THROWS_AS(P("x3", s), IndexError);
    CHECK_THROWS_AS(P("y1", s), IndexError);
    try {
      P("x1 + )", s);
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == 5);
    }
    const SpaceSignature d{2, 1, true};
    CHECK(mul(P("y1", d), P("q1", d)) == -mul(P("q1", d), P("y1", d)));
  }

  TEST_CASE("parse inverts format") {
    for (const SpaceSignature s : {SpaceSignature{2, 1, false}, SpaceSignature{3, 2, false}}) {
      verify::ElementGenerator gen(s, 23);
      verify::RandomOptions opt;
      opt.max_degree = 3;
      for (int t = 0; t < 100; ++t) {
        Element e = gen.element(opt);
        e += Element::monomial(s, gen.monomial(opt), Scalar::pi_power(gen.uniform(-3, 3)) * Scalar(gen.coefficient()));
        e *= Scalar(1) + Scalar::imaginary_unit();
        const std::string text = format(e);
        CHECK(parse(text, s) == e);
        CHECK(format(parse(text, s)) == text);
      }
    }
  }

  TEST_CASE("space mismatch is reported") {
    CHECK_THROWS_AS(mul(P("x1", SpaceSignature{2, 1, false}), P("x1", SpaceSignature{3, 1, false})), SpaceMismatch);
  }
}
