#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "thresholds/budget.hpp"
#include "thresholds/newton.hpp"

namespace thresholds {

// <normal, u> >= bound.
struct HalfSpace {
  std::vector<Rational> normal;
  Rational bound;
};

// a_m = I^m.
struct PowersOf {
  MonomialIdeal ideal;
};

// a_m = (x^u : u ∈ mQ) for Q cut out by half-spaces with nonnegative normals,
// which makes Q upward closed.
struct PolyhedralQ {
  std::size_t nvars;
  std::vector<HalfSpace> constraints;
};

// Q = {(u1, u2) >= 0 : (u1 + 1) u2 >= 1}, whose Arnold multiplicity is the
// irrational (sqrt(5) - 1)/2.
struct HyperbolaQ {};

using GradedMonomialSequence = std::variant<PowersOf, PolyhedralQ, HyperbolaQ>;

std::size_t dimension(const GradedMonomialSequence& s);

// Throws PreconditionError for a negative normal or an empty Q.
void validate(const GradedMonomialSequence& s);

// Minimal generators of a_m.
MonomialIdeal sequence_term(const GradedMonomialSequence& s, std::uint64_t m, const Budget& budget = {});

// Every product of a generator of a_p with one of a_q lies in a_{p+q}.
bool check_graded(const GradedMonomialSequence& s, std::uint64_t p, std::uint64_t q, const Budget& budget = {});

// 1..32, the powers of two up to m_max, and m_max.
std::vector<std::uint64_t> sample_schedule(std::uint64_t m_max);

enum class Convergence { Exact, ClosedForm, FiniteSamples };
std::string to_string(Convergence c);

struct AsymptoticEstimate {
  // (m, alpha(a_m)/m) on the sample schedule.
  std::vector<std::pair<std::uint64_t, Rational>> values;
  // Degenerate interval when the limit is exact.
  RationalInterval limit;
  Convergence convergence = Convergence::FiniteSamples;
  // Smallest sampled value, the best available upper estimate of the infimum.
  Rational min_so_far;
  // max over samples of m |alpha(a_m)/m - limit|, the c of a c/m band.
  Rational fitted_constant;

  const Rational& estimate() const { return values.back().second; }
};

// Arn(a_•) = lim Arn(a_m)/m = 1/lct(a_•). Exact for powers and polyhedral Q;
// the hyperbola gets an enclosure of (sqrt(5) - 1)/2 as its limit.
AsymptoticEstimate arn_asym(const GradedMonomialSequence& s, std::uint64_t m_max, const Budget& budget = {});

// val_v(a_•) = lim val_v(a_m)/m for a monomial valuation with weights v >= 0.
AsymptoticEstimate val_asym(const GradedMonomialSequence& s, const RationalPoint& v, std::uint64_t m_max,
                            const Budget& budget = {});

// Enclosure of (sqrt(5) - 1)/2.
RationalInterval golden_ratio_enclosure();

struct GoldenRatioReport {
  AsymptoticEstimate estimate;
  Rational tolerance;
  // |estimate(m_max) - eta| < tolerance for every eta in the enclosure.
  bool within_tolerance = false;

  // "m\tArn(a_m)/m" lines with 12-digit decimals.
  std::string table() const;
};

// The tolerance is 1/m_max, floored at 1/200.
GoldenRatioReport golden_ratio_demo(std::uint64_t m_max, const Budget& budget = {});

// Decimal rendering with a fixed number of digits after the point, truncated.
std::string decimal(const Rational& q, unsigned digits);

}  // namespace thresholds
