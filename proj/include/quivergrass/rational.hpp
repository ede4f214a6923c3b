#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qg {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Parses "p/q" or "p"; raises ParseError naming the token on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view token);

// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

bool is_zero(const Vec& v);

}  // namespace qg
