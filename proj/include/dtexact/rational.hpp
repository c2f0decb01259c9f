#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace dtexact {

// Exact rational coordinate. All comparisons in the solvers are exact; no
// floating point is used anywhere in solver logic.
using Rational = mpq_class;

// Parses an integer or finite decimal ("-3", "+2", "2.5", "0.125") into an
// exact rational in lowest terms. Returns nullopt on malformed input.
std::optional<Rational> parse_decimal(std::string_view text);

// Renders q exactly: as a plain decimal when the reduced denominator is of
// the form 2^a * 5^b (e.g. "0.5", "-3", "2.75"), otherwise as "p/q".
std::string to_decimal_string(const Rational& q);

// Parses either decimal text or a "p/q" fraction.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace dtexact
