#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diffsres/poly.hpp"

namespace diffsres {

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);
// Throws InexactDivision when b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

// p = c * q with q integer-primitive and positive leading coefficient.
// For p = 0 returns (1, 0).
std::pair<Rational, MultiPoly> integer_primitive(const MultiPoly& p);
MultiPoly normalize_associate(const MultiPoly& p);

// Greatest common divisor over Q, normalized by normalize_associate.
// gcd(0, 0) = 0. Uses a recursive primitive polynomial remainder sequence.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in s.
MultiPoly content_in(const MultiPoly& p, Symbol s);

// Pseudo-remainder of a by b with respect to s (sparse variant: the result is
// an associate of the classical prem up to a power of lc(b)).
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Symbol s);

}  // namespace diffsres
