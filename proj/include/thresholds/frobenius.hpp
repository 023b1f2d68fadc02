#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thresholds/budget.hpp"
#include "thresholds/grobner.hpp"
#include "thresholds/newton.hpp"
#include "thresholds/threshold.hpp"

namespace thresholds {

struct FrobeniusContext {
  std::uint64_t p;
  std::size_t n;
  unsigned e_max = 4;

  // Throws PreconditionError unless p is prime and e_max >= 1.
  void validate() const;
};

// nu(1), ..., nu(e_max) of one ideal.
struct NuSequence {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> values;  // values[e - 1] = nu(e)
  std::string ideal;

  std::uint64_t at(unsigned e) const { return values.at(e - 1); }
};

// g ∈ (x_1^{p^e}, ..., x_n^{p^e}), decided term by term.
bool in_frobenius_power(const Polynomial& g, unsigned e, const Budget& budget = {});

// Largest i with a^i not inside m^{[p^e]}. Found by binary search on i, each
// probe asking whether the Frobenius root of a^i escapes the maximal ideal.
// Requires a nonzero and a ⊆ m.
std::uint64_t nu(const PolyIdeal& a, unsigned e, const Budget& budget = {});

// Same value by expanding products of generators: f^i for principal ideals,
// otherwise all degree-i generator products, dropping those already in
// m^{[p^e]}. Slow; kept as a reference.
std::uint64_t nu_by_expansion(const PolyIdeal& a, unsigned e, const Budget& budget = {});

NuSequence nu_sequence(const PolyIdeal& a, unsigned e_max, const Budget& budget = {});

struct KnownThreshold {
  Rational value;
  std::string family;
};

// Closed-form F-pure threshold at the origin when a belongs to a family with a
// known answer: monomial ideals, principal ideals of order one or in one
// variable, the cusp x^2 + y^3 (p > 3), the Fermat cubic (p > 3) and diagonal
// hypersurfaces at primes p ≡ 1 mod the product of the exponents.
std::optional<KnownThreshold> known_fpt(const PolyIdeal& a);

struct FptReport {
  ThresholdResult threshold;
  NuSequence nu;
  // Enclosure from the nu values alone, before any closed form is applied.
  RationalInterval enclosure;
  std::string family;  // empty when no closed form applies
};

// The enclosure is [nu(e_max)/p^e_max, min_e (nu(e) + m)/p^e] clamped to
// [1/ord(a), n/ord(a)], with m = 1 for principal ideals and the number of
// generators otherwise. A closed form, when one applies, replaces it and is
// checked to lie inside.
FptReport fpt_enclosure(const PolyIdeal& a, const FrobeniusContext& ctx, const Budget& budget = {});

// Monomial ideals have the same threshold in every characteristic.
Rational fpt_monomial(const MonomialIdeal& a, std::uint64_t p);

// Cusp x^2 + y^3 for p > 3: 5/6 when p ≡ 1 mod 3, else 5/6 - 1/(6p).
Rational cusp_fpt(std::uint64_t p);

// Ternary cubic form over F_p: the coefficient of (xyz)^{p-1} in f^{p-1} is
// nonzero. Smoothness of the curve is the caller's responsibility.
bool is_ordinary_cubic(const Polynomial& f);

// 1 for an ordinary smooth cubic, 1 - 1/p otherwise.
Rational fpt_cubic_cone(const Polynomial& f);

}  // namespace thresholds
