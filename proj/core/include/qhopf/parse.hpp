#pragma once

#include "qhopf/presentation.hpp"

namespace qhopf {

/// Recursive-descent parser for the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom   := rational | scalar-symbol | generator | '(' expr ')'
/// Negative exponents are allowed on q and invertible generators only;
/// whitespace is ignored; juxtaposition is not multiplication.  The result is
/// normalized over the presentation.  Throws parse_error with a position.
NcPoly parse_expression(const std::string& text, const Presentation& P);

/// Scalar-only expressions (used by the t-aware presets and tests).
FieldElement parse_scalar(const std::string& text, FieldTag field);

}  // namespace qhopf
