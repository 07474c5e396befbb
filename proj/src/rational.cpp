#include "surfcalc/rational.hpp"

#include "surfcalc/errors.hpp"

#include <cctype>
#include <limits>

namespace surfcalc {

Integer floor_of(const Rational& r) {
  const Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil_of(const Rational& r) {
  const Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  Integer q = num / den;
  if (num > 0 && q * den != num) q += 1;
  return q;
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InputError("malformed rational '" + std::string(whole) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const Integer num = parse_integer(trim(t.substr(0, slash)), text);
  const Integer den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw InputError("expected an integer, got " + to_string(r));
  const Integer n = numerator_of(r);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw InputError("integer out of range: " + n.str());
  return static_cast<std::int64_t>(n);
}

}  // namespace surfcalc
