#pragma once

#include <string>

#include "elkchi/polynomial.hpp"

namespace elkchi {

// Parses the bit-exact polynomial grammar: integer and `p/q` rational
// literals, identifiers from `vars`, `+ - * ^`, parentheses. Implicit
// multiplication is a syntax error; whitespace is insignificant.
// Errors carry a 1-based column position.
Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars);

} // namespace elkchi
