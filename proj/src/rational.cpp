#include "ipm/rational.hpp"

#include <cstdio>

#include "ipm/error.hpp"

namespace ipm {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto numerator = text.substr(0, slash);
  const auto denominator = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(numerator) || !is_integer_literal(denominator) || denominator.front() == '-' ||
      denominator.front() == '+') {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(numerator.front() == '+' ? numerator.substr(1) : numerator), 10);
  mpz_class den(std::string(denominator), 10);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string to_decimal(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value.get_d());
  return buffer;
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(0 <= lo_ && lo_ <= hi_ && hi_ <= 1)) {
    throw InputError("invalid interval [" + to_string(lo_) + ", " + to_string(hi_) + "]");
  }
}

std::string to_string(const Interval& interval) {
  return "[" + to_string(interval.lo()) + ", " + to_string(interval.hi()) + "]";
}

std::string to_decimal(const Interval& interval) {
  return "[" + to_decimal(interval.lo()) + ", " + to_decimal(interval.hi()) + "]";
}

}  // namespace ipm
