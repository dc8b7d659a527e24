#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ellsub {

/// Exact rational number. GMP keeps every value canonical: reduced, positive
/// denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `[sign]digits[/positive digits]`. Throws Error(Errc::domain) on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational &q);

Rational pow(const Rational &base, unsigned exp);

/// Exact square root if `q` is the square of a rational.
bool rational_sqrt(const Rational &q, Rational &root);

} // namespace ellsub
