#pragma once

#include <string_view>

#include "ghrv/poly.hpp"

namespace ghrv {

// Recursive-descent parser for
//   expr   := ['-'] term (('+'|'-') ['-'] term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | ident | '(' expr ')'
// Identifiers are [A-Za-z][A-Za-z0-9]* and must name a ring variable.
// Throws Error{Syntax} with the offending offset, or Error{UnknownVariable}.
Poly parse_poly(std::string_view text, const PolyRingPtr& ring);

}  // namespace ghrv
