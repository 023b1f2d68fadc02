#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace thresholds {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical num/den with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer ipow(const Integer& base, unsigned long exp);

// "5/6", "-3", "4" (integers print without a denominator).
std::string to_string(const Rational& q);
// Always "num/den", used by the JSON reports.
std::string to_fraction_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Conversion with range check; throws PreconditionError when it does not fit.
std::uint64_t to_u64(const Integer& z);

struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

// Rational lo <= sqrt(x) <= hi with hi - lo < 10^-digits, by Newton iteration
// on big rationals. x must be nonnegative.
RationalInterval sqrt_enclosure(const Rational& x, unsigned digits = 30);

// Rational extended by +infinity; the value of a threshold at a point outside
// the zero locus.
class ExtendedRational {
 public:
  ExtendedRational(Rational value) : value_(std::move(value)) {}
  static ExtendedRational infinity() { return ExtendedRational(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;
  std::string str() const { return is_infinite() ? "inf" : to_string(*value_); }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.value_ == b.value_;
  }

 private:
  ExtendedRational() = default;
  std::optional<Rational> value_;
};

}  // namespace thresholds
