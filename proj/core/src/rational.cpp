#include "twoenv/rational.hpp"

#include <algorithm>
#include <cctype>

#include "twoenv/errors.hpp"

namespace twoenv {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    return ParseError("not a rational number: '" + std::string(text) +
                      "' (expected p or p/q with integer p, positive integer q)");
  };

  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }

  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) throw fail();

  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) throw fail();
  if (negative) p = -p;
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace twoenv
