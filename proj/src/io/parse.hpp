#pragma once

#include <string>
#include <vector>

#include "algebra/multipoly.hpp"

namespace folres {

/// Parses a polynomial in the given variables.
///   expr   := sign? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | variable | '(' expr ')'
/// Whitespace is ignored; juxtaposition is a syntax error.
MultiPoly parse_expression(const std::string& src, const std::vector<std::string>& variables);

/// "P=...,Q=..." over (x, y).
std::pair<MultiPoly, MultiPoly> parse_field_spec(const std::string& spec);

const std::vector<std::string>& plane_variables();

}  // namespace folres
