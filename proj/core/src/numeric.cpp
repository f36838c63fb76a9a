#include "edgering/numeric.hpp"

#include "edgering/errors.hpp"

#include <limits>

namespace edgering {

Integer gcd(const Integer& a, const Integer& b) {
  Integer result = boost::multiprecision::gcd(a, b);
  return result < 0 ? Integer(-result) : result;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InvalidArgument("floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw InvalidArgument("malformed integer: " + std::string(text));
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidArgument("malformed integer: " + std::string(text));
    }
  }
  std::string digits(text.substr(start));
  Integer value(digits);
  return text[0] == '-' ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator: " + std::string(text));
  return Rational(num, den);
}

bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw ContractViolation("integer does not fit in 64 bits: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace edgering
