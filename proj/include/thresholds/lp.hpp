#pragma once

#include <cstddef>
#include <vector>

#include "thresholds/rational.hpp"

namespace thresholds::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation;
  Rational rhs;
};

// minimize <objective, x> subject to the constraints and x >= 0.
struct Program {
  std::size_t nvars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

// Two-phase dense tableau simplex over exact rationals with Bland's rule,
// so it terminates on degenerate problems.
Solution solve(const Program& program);

}  // namespace thresholds::lp
