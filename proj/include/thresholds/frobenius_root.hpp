#pragma once

#include <cstdint>
#include <map>

#include "thresholds/budget.hpp"
#include "thresholds/grobner.hpp"

namespace thresholds {

// b^{[1/p^e]}: the smallest ideal J with b ⊆ J^{[p^e]}, generated by the
// components of every generator in the basis {x^w : 0 <= w_i < p^e}.
// Returned standardized.
PolyIdeal frobenius_root(const PolyIdeal& b, unsigned e, const Budget& budget = {});

// (a^k)^{[1/p^e]} without expanding a^k. One root is taken per step using
//   (a^Q K)^{[1/p]} = sum_r a^{(Q-|r|)/p} (g^r K)^{[1/p]},
// the sum over digit vectors r in [0,p)^m with |r| <= Q, |r| = Q mod p, where
// g_1..g_m are the generators of a. Returned standardized.
// The same root as a sum of terms a^Q K_Q, keyed by Q. Terms dominated by
// another (smaller Q, larger K) are dropped.
std::map<std::uint64_t, PolyIdeal> frobenius_root_of_power_terms(const PolyIdeal& a, std::uint64_t k, unsigned e,
                                                                 const Budget& budget = {});

PolyIdeal frobenius_root_of_power(const PolyIdeal& a, std::uint64_t k, unsigned e, const Budget& budget = {});

}  // namespace thresholds
