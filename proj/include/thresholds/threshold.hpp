#pragma once

#include <string>

#include "thresholds/rational.hpp"

namespace thresholds {

enum class Method { ClosedForm, LinearProgram, NuLimit, Asymptotic };

std::string to_string(Method m);

// A threshold known exactly (lo == hi) or enclosed in [lo, hi].
class ThresholdResult {
 public:
  static ThresholdResult exact(Rational value, Method method, bool certified = true) {
    return ThresholdResult(value, value, certified, method);
  }
  static ThresholdResult enclosure(Rational lo, Rational hi, Method method, bool certified = false);

  bool is_exact() const { return lo_ == hi_; }
  // Throws PreconditionError for a proper interval.
  const Rational& value() const;
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool certified() const { return certified_; }
  Method method() const { return method_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  std::string str() const;

 private:
  ThresholdResult(Rational lo, Rational hi, bool certified, Method method)
      : lo_(std::move(lo)), hi_(std::move(hi)), certified_(certified), method_(method) {}
  Rational lo_;
  Rational hi_;
  bool certified_;
  Method method_;
};

}  // namespace thresholds
