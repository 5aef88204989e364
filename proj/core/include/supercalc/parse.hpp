#pragma once

// Text form of Elements.
//
//   expr   = ["+"|"-"] term {("+"|"-") term}
//   term   = factor {"*" factor}
//   factor = atom ["^" ["-"] nat]
//   atom   = rational | "pi" | "sqrtpi" | "I" | var | "(" expr ")"
//   var    = "x"nat | "q"nat | "y"nat | "e"nat | "w"nat
//
// q is the anticommuting x`, y the second anticommuting set, w the Weyl
// generator e`. Negative exponents are accepted only on invertible constants
// (pi, sqrtpi, rationals). Factor order is respected.

#include <string>
#include <string_view>

#include "supercalc/superalgebra.hpp"

namespace supercalc {

Element parse(std::string_view text, const SpaceSignature& space);

/// Canonical text form; parse(format(f)) == f.
std::string format(const Element& f);
/// A Scalar written in the expression grammar.
std::string format_scalar_expr(const Scalar& s);

}  // namespace supercalc
