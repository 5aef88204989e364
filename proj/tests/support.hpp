#pragma once

#include <doctest.h>

#include "supercalc/parse.hpp"
#include "supercalc/superalgebra.hpp"

namespace test {

inline supercalc::Element P(const char* text, const supercalc::SpaceSignature& space) {
  return supercalc::parse(text, space);
}

inline supercalc::Element C(const supercalc::SpaceSignature& space, const supercalc::Scalar& s) {
  return supercalc::Element::constant(space, s);
}

inline supercalc::Rational Q(long a, long b = 1) { return supercalc::make_rational(a, b); }

}  // namespace test

namespace doctest {
template <>
struct StringMaker<supercalc::Element> {
  static String convert(const supercalc::Element& e) { return supercalc::format(e).c_str(); }
};
template <>
struct StringMaker<supercalc::Scalar> {
  static String convert(const supercalc::Scalar& s) { return supercalc::to_string(s).c_str(); }
};
}  // namespace doctest
