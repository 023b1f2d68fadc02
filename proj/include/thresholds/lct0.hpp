#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "thresholds/newton.hpp"
#include "thresholds/polyring.hpp"
#include "thresholds/threshold.hpp"

namespace thresholds {

// x_1^{a_1} + ... + x_n^{a_n}.
struct Diagonal {
  std::vector<std::uint64_t> exponents;
};
// Homogeneous degree-d polynomial in n variables with an isolated singularity at 0.
struct HomogeneousIsolated {
  std::uint64_t n;
  std::uint64_t d;
};
// Ideal of a nonsingular subscheme of codimension r in an n-dimensional ambient space.
struct SmoothSubscheme {
  std::uint64_t n;
  std::uint64_t r;
};
struct Monomial {
  MonomialIdeal ideal;
};
// Ordinary double point xy in the plane.
struct Node {};

using LctFamilyInput = std::variant<Diagonal, HomogeneousIsolated, SmoothSubscheme, Monomial, Node>;

// Throws PreconditionError for malformed parameters (exponent 0, r > n, ...).
void validate(const LctFamilyInput& input);

// Log canonical threshold at the origin for the families with closed forms.
ThresholdResult lct_closed_form(const LctFamilyInput& input);

// Threshold of a principal ideal generated by a general linear combination of
// the generators of a: min(lct(a), 1). Only valid for generic coefficients.
Rational general_combination_lct(const Rational& lct_of_ideal);

// Certified range of lct_0 for any polynomial sharing f's terms up to degree N.
RationalInterval truncation_bound(const Rational& lct_f, std::uint64_t n, std::uint64_t N);

// Maps a polynomial over QQ or ZZ onto the family catalog; nullopt when no
// family matches. Monomials, diagonal sums of pure powers and polynomials
// with a nonzero linear part are recognized. Homogeneous inputs are not,
// since isolatedness of the singularity cannot be checked here.
std::optional<LctFamilyInput> classify_polynomial(const Polynomial& f);

// lct_0(f) for a recognized polynomial; infinite when f(0) != 0. Throws
// UnsupportedFamily otherwise.
ExtendedRational lct_of_polynomial(const Polynomial& f);

}  // namespace thresholds
