#pragma once

#include <string>

#include "pdeform/poly.hpp"

namespace pdeform {

// Grammar (whitespace insignificant):
//   expr     ::= term (("+" | "-") term)*
//   term     ::= [sign] [rational "*"] monomial | [sign] rational
//   rational ::= int ["/" posint]
//   monomial ::= var ["^" posint] ("*" var ["^" posint])*
//   var      ::= "x" | "y" | "z"     (z rejected for arity 2)
// Errors are reported with the offending position.
Poly parse_poly(const std::string& text, int arity = 3);

}  // namespace pdeform
