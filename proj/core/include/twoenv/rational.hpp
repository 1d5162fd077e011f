#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace twoenv {

// Exact rational arithmetic for all probabilities and money amounts.
// Values are arbitrary precision and always held in lowest terms with a
// positive denominator; equality is exact, never tolerance-based.
// Expression templates are disabled so operators return plain values.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_int_backend<>,
    boost::multiprecision::et_off>;

using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "p" or "p/q" with an optional leading sign on p; q must be a
// positive integer literal. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// Renders in lowest terms as "p/q", or plain "p" when the denominator is 1.
std::string format_rational(const Rational& value);

// Nearest double. Only the simulation and report boundaries use this;
// the analysis itself never leaves exact arithmetic.
double to_double(const Rational& value);

}  // namespace twoenv
