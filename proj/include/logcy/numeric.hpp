#pragma once

// Exact scalars. Every quantity in the engine is an arbitrary-precision
// integer or rational; there is no floating point anywhere in the core.

#include <gmpxx.h>

#include <string>

namespace logcy {

using Int = mpz_class;
using Scalar = mpq_class;  // always canonical: reduced, denominator > 0

// Parses an integer from a decimal string. Throws BadInputError.
Int int_from_string(const std::string& s);

// Parses "7", "-5/2" or "2.5" into a canonical rational. Throws BadInputError.
Scalar scalar_from_string(const std::string& s);

std::string to_string(const Int& z);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& q);

// Checked narrowing; throws BadInputError when out of range.
long long to_int64(const Int& z);

bool fits_int64(const Int& z);

inline int sign(const Int& z) { return sgn(z); }
inline int sign(const Scalar& q) { return sgn(q); }

}  // namespace logcy
