#ifndef INVSTAB_POLY_PARSE_HPP
#define INVSTAB_POLY_PARSE_HPP

#include <string>

#include "invstab/polynomial.hpp"

namespace invstab {

// Parses an element of Q[t] written with integer or a/b literals, the
// variable t, +, -, *, ^ and parentheses, e.g. "t^3 - 2*t + 1/2".
// Throws invalid_input on malformed text.
QPoly parse_qpoly(const std::string& text);

std::string qpoly_to_string(const QPoly& f);

}  // namespace invstab

#endif
