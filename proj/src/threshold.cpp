#include "thresholds/threshold.hpp"

#include "thresholds/errors.hpp"

namespace thresholds {

std::string to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::LinearProgram: return "LP";
    case Method::NuLimit: return "nu-limit";
    case Method::Asymptotic: return "asymptotic";
  }
  return "";
}

ThresholdResult ThresholdResult::enclosure(Rational lo, Rational hi, Method method, bool certified) {
  if (lo > hi) throw PreconditionError("empty threshold enclosure");
  return ThresholdResult(std::move(lo), std::move(hi), certified, method);
}

const Rational& ThresholdResult::value() const {
  if (!is_exact()) throw PreconditionError("threshold is only known up to an interval");
  return lo_;
}

std::string ThresholdResult::str() const {
  if (is_exact()) return to_string(lo_);
  return "[" + to_string(lo_) + ", " + to_string(hi_) + "]";
}

}  // namespace thresholds
