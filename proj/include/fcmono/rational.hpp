#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fcmono {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with denominator 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace fcmono
