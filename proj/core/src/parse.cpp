#include "supercalc/parse.hpp"

#include <cctype>
#include <vector>

#include "supercalc/errors.hpp"

namespace supercalc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SpaceSignature& space) : text_(text), space_(space) {}

  Element run() {
    Element e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  bool accept_word(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  Integer natural() {
    skip();
    if (!at_digit()) fail("expected a natural number");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int small_natural() {
    const std::size_t start = pos_;
    Integer v = natural();
    if (v > 1000) {
      pos_ = start;
      fail("number too large");
    }
    return static_cast<int>(v.get_si());
  }

  Element expr() {
    Element acc(space_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Element t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    while (accept('*')) acc = mul(acc, factor());
    return acc;
  }

  Element factor() {
    const std::size_t start = pos_;
    Element base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const int k = small_natural();
    if (!negative) return power(base, k);
    // Negative powers only for invertible constants.
    if (!base.is_variable_free() || !base.is_scalar_valued() || base.size() != 1) {
      pos_ = start;
      fail("negative exponent on a non-constant");
    }
    Scalar inv;
    try {
      inv = base.terms().begin()->second.inverse();
    } catch (const std::domain_error&) {
      pos_ = start;
      fail("negative exponent on a non-invertible constant");
    }
    return power(Element::constant(space_, inv), k);
  }

  Element variable(char kind, std::size_t start) {
    const int idx = small_natural();
    try {
      switch (kind) {
        case 'x': return Element::bosonic(space_, idx);
        case 'q': return Element::fermionic(space_, idx);
        case 'y': return Element::second_fermionic(space_, idx);
        case 'e': return Element::clifford(space_, idx);
        case 'w': return Element::weyl(space_, idx);
        default: break;
      }
    } catch (const IndexError& err) {
      throw IndexError(std::string(err.what()) + " at byte " + std::to_string(start));
    } catch (const SpaceMismatch&) {
      throw IndexError("y" + std::to_string(idx) + " needs a doubled space, at byte " + std::to_string(start));
    }
    fail("unknown variable");
  }

  Element atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    if (accept('(')) {
      Element e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (at_digit()) {
      Integer num = natural();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (!at_digit()) fail("expected denominator");
        den = natural();
        if (den == 0) {
          pos_ = start;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Element::constant(space_, Scalar(q));
    }
    if (accept_word("sqrtpi")) return Element::constant(space_, Scalar::pi_power(1));
    if (accept_word("pi")) return Element::constant(space_, Scalar::pi_power(2));
    if (accept_word("I")) return Element::constant(space_, Scalar::imaginary_unit());
    const char c = text_[pos_];
    if (c == 'x' || c == 'q' || c == 'y' || c == 'e' || c == 'w') {
      ++pos_;
      if (!at_digit()) fail("expected variable index");
      return variable(c, start);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  SpaceSignature space_;
  std::size_t pos_ = 0;
};

std::string gauss_expr(const GaussRational& c) {
  const bool has_re = sgn(c.re) != 0;
  const bool has_im = sgn(c.im) != 0;
  if (!has_im) return to_string(c.re);
  std::string im;
  if (abs(c.im) == 1) {
    im = "I";
  } else {
    im = to_string(abs(c.im)) + "*I";
  }
  if (!has_re) return (sgn(c.im) < 0 ? "-" : "") + im;
  return "(" + to_string(c.re) + (sgn(c.im) < 0 ? " - " : " + ") + im + ")";
}

std::string sqrtpi_power(int s) {
  if (s == 1) return "sqrtpi";
  return "sqrtpi^" + std::to_string(s);
}

// One Scalar term without its leading sign; returns the sign separately.
std::string scalar_term_body(int s, const GaussRational& c, bool& negative) {
  GaussRational cc = c;
  negative = false;
  if (cc.is_real() && sgn(cc.re) < 0) {
    negative = true;
    cc = -cc;
  } else if (sgn(cc.re) == 0 && sgn(cc.im) < 0) {
    negative = true;
    cc = -cc;
  }
  const bool unit = cc.is_real() && cc.re == 1;
  if (s == 0) return gauss_expr(cc);
  if (unit) return sqrtpi_power(s);
  return gauss_expr(cc) + "*" + sqrtpi_power(s);
}

}  // namespace

Element parse(std::string_view text, const SpaceSignature& space) {
  space.validate();
  return Parser(text, space).run();
}

std::string format_scalar_expr(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    bool neg = false;
    std::string body = scalar_term_body(e, c, neg);
    if (first) {
      out += (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

std::string format(const Element& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : f.terms()) {
    std::vector<std::string> factors;
    for (int i = 0; i < kMaxBosonic; ++i) {
      const int a = mono.bos[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      std::string v = "x" + std::to_string(i + 1);
      if (a > 1) v += "^" + std::to_string(a);
      factors.push_back(v);
    }
    const int nx = 2 * f.space().n;
    for (int j = 0; j < 16; ++j) {
      if (((mono.ferm >> j) & 1u) == 0) continue;
      factors.push_back(j < nx ? "q" + std::to_string(j + 1) : "y" + std::to_string(j - nx + 1));
    }
    for (int i = 0; i < kMaxBosonic; ++i) {
      if ((mono.cliff >> i) & 1u) factors.push_back("e" + std::to_string(i + 1));
    }
    for (int j = 0; j < 2 * kMaxPairs; ++j) {
      const int b = mono.weyl[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      std::string v = "w" + std::to_string(j + 1);
      if (b > 1) v += "^" + std::to_string(b);
      factors.push_back(v);
    }

    bool neg = false;
    std::string coef_text;
    if (coef.is_monomial()) {
      const auto& [s, c] = coef.terms()[0];
      coef_text = scalar_term_body(s, c, neg);
      if (coef_text == "1" && !factors.empty()) coef_text.clear();
    } else {
      coef_text = "(" + format_scalar_expr(coef) + ")";
    }
    std::string body = coef_text;
    for (const auto& fct : factors) {
      if (!body.empty()) body += "*";
      body += fct;
    }
    if (first) {
      out += (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace supercalc
