#pragma once

#include <string>

#include "scmm/monomial.hpp"

namespace scmm {

// Text format: comma-separated products, e.g. "x1*x3, x2*x4"; exponents as
// "x2^3".  The zero ideal renders as "0", the unit ideal as "1".  Parsing
// also accepts the square-free shorthand without '*' ("x1x3"); note that
// multi-digit runs bind to one index there (x12 is x_12, not x1*x2).

std::string to_text(const Monomial& m);
std::string to_text(const MonomialIdeal& I);
std::string to_text(const PrimeRef& p); // "(x1,x3,x4)"

/// Parse the text format.  `n` < 0 infers the ambient count from the largest
/// index seen; otherwise indices must fit in the given n.
MonomialIdeal ideal_from_text(const std::string& text, int n = -1);

// JSON format (bit-exact contract): {"n": <int>, "gens": [[e1,...,en], ...]}
std::string to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const std::string& json);

/// Autodetect: leading '{' means JSON, anything else the text format.
MonomialIdeal parse_ideal(const std::string& input, int n = -1);

} // namespace scmm
