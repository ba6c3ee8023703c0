#pragma once

#include <gmpxx.h>

#include <string>

namespace geograph {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Least nonnegative residue of x modulo m, for m > 0.
Int residue(const Int& x, const Int& m);

bool divides(const Int& d, const Int& x);

// Quotient x / d, throwing DivisibilityViolation unless d | x.
Int exact_div(const Int& x, const Int& d);

// Canonicalized rational num/den (den != 0).
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);

// Numerator of an integral rational; throws DivisibilityViolation otherwise.
Int to_integer(const Rat& q);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

std::string to_string(const Int& x);
std::string to_string(const Rat& q);

// Parses a base-10 integer with optional sign; throws MalformedPlan on any
// other input.
Int parse_int(const std::string& text);

}  // namespace geograph
