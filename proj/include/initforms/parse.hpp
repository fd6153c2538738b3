#pragma once

#include "initforms/zpoly.hpp"

#include <string>

namespace initforms {

// Expression grammar (whitespace-insensitive):
//   poly  := ['-'] term (('+'|'-') term)*
//   term  := coeff ('*' factor)* | factor ('*' factor)*
//   factor:= var ('^' nat)?      var := 'x' nat | 'z'
//   coeff := int ('/' nat)
// Variables are x1..xn; z is reserved for the coaction variable.

// Throws SyntaxError (with position), VarOutOfRange, or ZNotAllowed when z
// appears.
Poly parse_poly(const std::string& text, int nvars);

// Same grammar with z admitted.
ZPoly parse_zpoly(const std::string& text, int nvars);

// Canonical text form: terms in descending graded-lex order, rational
// coefficients as p/q, unit coefficients omitted. parse(format(p)) == p and
// format is a fixed point on its own output.
std::string format_poly(const Poly& p);
std::string format_zpoly(const ZPoly& p);

// Highest x-index mentioned anywhere in the expression; 0 when none. Used by
// the CLI to infer the ambient ring when no explicit count is given.
int max_var_index(const std::string& text);

}  // namespace initforms
