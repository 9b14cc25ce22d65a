#pragma once

#include <optional>
#include <string>

#include "reeslift/poly.hpp"

namespace reeslift {

// Text form: terms joined by " + " in descending monomial order, each term
// "c*x[i,j]^e*...*T[k]^e" with c an integer or "p/q" and a leading "-" on
// negative coefficients; "^e" is omitted for exponent 1 and the zero
// polynomial prints as "0". print/parse round-trips bit-exactly.
std::string poly_to_text(const Poly& p);

// Whitespace-insensitive. Accepts coefficient-less terms ("x[1,1]",
// "-T[2]^3") as shorthand for coefficient +-1. A shape validates variable
// ranges and becomes the context of the result.
Poly parse_poly(const std::string& text, std::optional<Shape> shape = std::nullopt);

}  // namespace reeslift
