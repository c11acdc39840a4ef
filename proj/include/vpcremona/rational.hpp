#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vpcremona {

// Arbitrary-precision rational in canonical form (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

// "num/den", always with an explicit denominator.
std::string to_string(const Rational& r);

// Accepts "n", "n/d" and surrounding whitespace; throws InvalidArgument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace vpcremona
