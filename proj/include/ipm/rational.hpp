#ifndef IPM_RATIONAL_HPP
#define IPM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ipm {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms;
/// parse_rational canonicalizes parsed input.
using Rational = mpq_class;

/// Parses "p/q" or an integer string. Throws InputError on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal approximation with 6 significant digits.
std::string to_decimal(const Rational& value);

inline bool in_unit_range(const Rational& value) { return value >= 0 && value <= 1; }

/// Closed subinterval [lo, hi] of [0, 1].
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  /// Throws InputError unless 0 <= lo <= hi <= 1.
  Interval(Rational lo, Rational hi);

  static Interval point(const Rational& value) { return Interval(value, value); }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  bool contains(const Rational& value) const { return lo_ <= value && value <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
};

/// "[lo, hi]" with exact endpoints.
std::string to_string(const Interval& interval);
/// "[lo, hi]" with decimal endpoints.
std::string to_decimal(const Interval& interval);

}  // namespace ipm

#endif  // IPM_RATIONAL_HPP
