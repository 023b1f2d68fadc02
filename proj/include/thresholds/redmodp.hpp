#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thresholds/budget.hpp"
#include "thresholds/frobenius.hpp"
#include "thresholds/lct0.hpp"

namespace thresholds {

struct Reduction {
  Polynomial polynomial;
  // Some coefficient vanished mod p, so the reduction lost part of the support.
  bool degenerate = false;
};

// Coefficient-wise image in F_p[x] of a polynomial over Z.
Reduction reduce_mod_p(const Polynomial& f, std::uint64_t p);

enum class Relation { Equal, FptLess, Inconclusive };
std::string to_string(Relation r);

struct ComparisonRow {
  std::uint64_t p = 0;
  ThresholdResult fpt;
  Rational lct0;
  Relation relation = Relation::Inconclusive;
  std::optional<std::uint64_t> modulus;  // N for diagonal families
  std::optional<std::uint64_t> residue;  // p mod N
  bool degenerate = false;
  // Small primes where the closed forms do not apply (p <= 3 for cusps and cubics).
  bool excluded = false;
  std::string family;
};

// A ternary cubic form with integer coefficients whose curve is smooth over Q
// and at every compared prime; checking this is left to the caller.
struct CubicCone {
  Polynomial form;
};

// The comparison input: a family with a closed-form lct0, or a smooth cubic.
using ComparisonInput = std::variant<LctFamilyInput, CubicCone>;

// Integer model of a catalog family: sum x_i^{a_i} for diagonals, x*y for the
// node, the monomial generators, x_1..x_r for smooth subschemes.
std::vector<Polynomial> integer_model(const LctFamilyInput& family);

// lct_0 against fpt of the reduction at each prime, rows ordered by p. A row
// is Equal or FptLess only when its fpt is certified.
std::vector<ComparisonRow> compare_family(const ComparisonInput& input, const std::vector<std::uint64_t>& primes,
                                          unsigned e_max = 3, const Budget& budget = {});

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Aligned plain-text table of the rows.
std::string comparison_table(const std::vector<ComparisonRow>& rows);

}  // namespace thresholds
