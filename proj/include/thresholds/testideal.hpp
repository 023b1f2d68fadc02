#pragma once

#include <cstdint>
#include <vector>

#include "thresholds/budget.hpp"
#include "thresholds/frobenius_root.hpp"
#include "thresholds/grobner.hpp"

namespace thresholds {

// I_e = (a^{ceil(lambda p^e)})^{[1/p^e]}, computed without expanding the power.
PolyIdeal test_ideal_approximation(const PolyIdeal& a, const Rational& lambda, unsigned e, const Budget& budget = {});

struct TauResult {
  PolyIdeal ideal;
  // The chain, followed to the horizon, ended in an equality I_e = I_{e+1}
  // across which ceil(lambda p^e)/p^e strictly decreased (or equals lambda).
  // This is evidence of stabilization, not a proof.
  bool stabilized = false;
  unsigned stable_at = 0;  // first e from which the computed chain is constant
  std::vector<PolyIdeal> chain;  // I_1, I_2, ...
};

// Test ideal tau(a^lambda) as the stable member of the ascending chain I_e.
// Each step asserts I_e ⊆ I_{e+1}. Without stabilization the last computed
// ideal is returned with stabilized = false.
TauResult tau(const PolyIdeal& a, const Rational& lambda, unsigned e_max = 5, const Budget& budget = {});

enum class JumpExactness { GridResolution, Certified };

struct Jump {
  Rational lambda;
  PolyIdeal before;
  PolyIdeal after;
  // The location is known exactly, not only to within 1/grid.
  bool pinned = false;
};

struct JumpingReport {
  Rational lambda_max;
  std::uint64_t grid = 0;
  std::vector<Jump> jumps;
  JumpExactness exactness = JumpExactness::GridResolution;
  bool all_stabilized = true;
};

// lcm(6, p^2), falling back to lcm(6, p) and then 6 when above 10^4.
std::uint64_t default_grid(std::uint64_t p);

// Evaluates tau on {k/grid : 0 <= k <= lambda_max grid} and reports every grid
// point where the ideal changes. A jump is pinned when it is the threshold of
// a closed-form family (it is then the first jump) or an integer jump of a
// principal ideal.
JumpingReport fjump_scan(const PolyIdeal& a, const Rational& lambda_max, std::uint64_t grid, unsigned e_max = 5,
                         const Budget& budget = {});

// tau(a^lambda) = a tau(a^{lambda-1}); needs lambda >= number of generators
// (lambda >= 1 for principal ideals). Throws NotStabilized when either side
// fails to stabilize.
bool check_skoda(const PolyIdeal& a, const Rational& lambda, unsigned e_max = 5, const Budget& budget = {});

// tau(a^{lambda/p}) = tau(a^lambda)^{[1/p]}.
bool check_p_scaling(const PolyIdeal& a, const Rational& lambda, unsigned e_max = 5, const Budget& budget = {});

}  // namespace thresholds
