#ifndef NZ_EXPRESSION_HPP
#define NZ_EXPRESSION_HPP

#include <string>

#include "nz/multipoly.hpp"

namespace nz {

// Parses a polynomial expression over + - * ^ and parentheses, with integer
// literals and variable names such as "l*(x-m^2)*x^3 - 2*y".  Exponents must
// be nonnegative integers.  Throws ParseError on malformed input.
MultiPoly parse_poly(const std::string& text);

}  // namespace nz

#endif  // NZ_EXPRESSION_HPP
