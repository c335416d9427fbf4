#pragma once

#include <string>

#include "klab/polynomial.hpp"

namespace klab {

// Polynomial text grammar shared by the CLI and fixtures: integer or
// rational coefficients (-10, 3/4), variables X0..Xn, operators + - * ^,
// parentheses, insignificant whitespace, no implicit multiplication.
// Parse failures throw Error("parse_error", ...) with a column diagnostic.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

} // namespace klab
