#pragma once

#include <gmpxx.h>

#include <string>

namespace legweb {

// mpq_class keeps numerator/denominator in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "n/d", with "/d" omitted when d == 1.
std::string to_string(const Rational& r);

// Accepts "n", "n/d", with optional leading sign. Throws
// std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

Rational make_rational(long num, long den = 1);

}  // namespace legweb
