// Text form of polynomials.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*      division only by nonzero constants
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | x | y | z | u | v | w | '(' expr ')'
//
// u, v, w are read as x, y, z.  Whitespace is ignored.
#pragma once

#include <string>
#include <string_view>

#include "dani/ring.hpp"

namespace dani {

/// Throws std::invalid_argument with the offending position.
AmbientPoly parse_expression(std::string_view text);

/// An expression in z (or w) alone.
RatPoly parse_univariate(std::string_view text);

/// Parses and reduces modulo xy - p(z).
SurfacePoly parse_function(const SurfaceSpec& s, std::string_view text);

/// Canonical text of a function: x-monomials by falling x-degree, then the
/// part in z alone, then y-monomials by rising y-degree; z-degree falls within
/// each block.  parse_function(s, format(f)) == f.
std::string format(const SurfacePoly& f, bool target_names = false);

std::string format(const RatPoly& f, bool target_names = false);

}  // namespace dani
