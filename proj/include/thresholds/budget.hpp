#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace thresholds {

// Caps on the expensive steps. Exceeding one raises BudgetExceeded.
struct Budget {
  std::size_t max_terms = 10'000'000;      // terms in any polynomial product or power
  std::size_t max_reductions = 100'000;    // S-polynomial reductions per Groebner basis
  std::size_t max_products = 1'000'000;    // generator products when expanding ideal powers
  std::uint64_t max_frobenius_power = 100'000'000;  // largest p^e

  // Parses "terms=N,pairs=N,products=N,frobenius=N"; unknown keys or
  // non-positive values throw PreconditionError.
  static Budget from_spec(std::string_view spec, Budget base);
  static Budget from_spec(std::string_view spec);
};

}  // namespace thresholds
