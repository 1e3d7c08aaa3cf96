#pragma once

#include <gmpxx.h>

#include <string>

namespace wigner {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational& q);

// Fifteen significant digits, printf %.15g style.
std::string to_decimal_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace wigner
