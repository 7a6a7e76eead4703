#ifndef TOREXT_PARSER_HPP
#define TOREXT_PARSER_HPP

#include <string>

#include "torext/poly.hpp"

namespace torext {

// Parses the expression grammar
//   expression ::= ['-'] term (('+'|'-') term)*
//   term       ::= factor ('*' factor)*
//   factor     ::= coefficient | variable ('^' natural)? | '(' expression ')'
//   coefficient ::= integer | integer '/' integer   (fractions over Q only)
// with insignificant whitespace. Variable names must exist in the registry.
MultiPoly poly_parse(const std::string& text, RegistryPtr reg, Field field);

}  // namespace torext

#endif
