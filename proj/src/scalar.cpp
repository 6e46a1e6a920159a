#include "kreg/scalar.hpp"

#include "kreg/error.hpp"

namespace kreg {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw InvalidArgument("empty integer literal");
  for (char c : digits)
    if (c < '0' || c > '9') throw InvalidArgument("invalid integer literal '" + std::string(text) + "'");
  return Integer(std::string(text.front() == '+' ? text.substr(1) : text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_fraction_string(const Rational& value) {
  return numerator(value).str() + '/' + denominator(value).str();
}

}  // namespace kreg
