#include "thresholds/testideal.hpp"

#include <numeric>
#include <stdexcept>

#include "parallel.hpp"
#include "thresholds/errors.hpp"
#include "thresholds/frobenius.hpp"

namespace thresholds {

namespace {

void require_tau_input(const PolyIdeal& a, const Rational& lambda) {
  if (!a.ring().field().is_prime_field()) throw PreconditionError("test ideals need an ideal over F_p");
  if (a.is_zero()) throw PreconditionError("test ideals need a nonzero ideal");
  if (lambda < 0) throw PreconditionError("lambda must be nonnegative");
}

PolyIdeal stable_tau(const PolyIdeal& a, const Rational& lambda, unsigned e_max, const Budget& budget) {
  TauResult r = tau(a, lambda, e_max, budget);
  if (!r.stabilized)
    throw NotStabilized("tau(a^" + to_string(lambda) + ") did not stabilize within e <= " + std::to_string(e_max));
  return r.ideal;
}

}  // namespace

PolyIdeal test_ideal_approximation(const PolyIdeal& a, const Rational& lambda, unsigned e, const Budget& budget) {
  require_tau_input(a, lambda);
  std::uint64_t q = frobenius_modulus(a.ring().field().characteristic(), e, budget);
  Integer k = ceil(lambda * Integer(static_cast<unsigned long>(q)));
  return frobenius_root_of_power(a, to_u64(k), e, budget);
}

TauResult tau(const PolyIdeal& a, const Rational& lambda, unsigned e_max, const Budget& budget) {
  require_tau_input(a, lambda);
  if (e_max < 2) throw PreconditionError("tau needs a horizon e_max >= 2");
  TauResult result{PolyIdeal::unit(a.ring()), false, 0, {}};
  if (lambda == 0) {
    result.stabilized = true;
    result.stable_at = 1;
    result.chain.push_back(result.ideal);
    return result;
  }
  // I_e is the root of a^{k_e} with k_e/p^e = ceil(lambda p^e)/p^e >= lambda.
  // When k_e/p^e does not move, I_e = I_{e+1} carries no information (for a
  // principal ideal both equal tau at that same exponent), so only steps where
  // the exponent drops, or reaches lambda, count toward the horizon. A single
  // equality is not enough: the exponent can still be above a jump, so the
  // chain is followed to the horizon and must end in an informative equality.
  Rational previous_exponent;
  unsigned counted = 0;
  std::size_t constant_from = 0;  // chain index where the final constant run starts
  bool last_step_equal = false;
  for (unsigned e = 1; counted < e_max; ++e) {
    std::uint64_t q = frobenius_modulus(a.ring().field().characteristic(), e, budget);
    Integer qz(static_cast<unsigned long>(q));
    Rational exponent = make_rational(ceil(lambda * qz), qz);
    PolyIdeal current = test_ideal_approximation(a, lambda, e, budget);
    if (result.chain.empty()) {
      ++counted;
    } else {
      const PolyIdeal& previous = result.chain.back();
      if (!contains(current, previous, budget))
        throw std::logic_error("test ideal chain is not ascending at e = " + std::to_string(e));
      bool informative = exponent < previous_exponent || exponent == lambda;
      bool same = equal(previous, current, budget);
      if (!same) constant_from = result.chain.size();
      if (informative) {
        ++counted;
        last_step_equal = same;
      } else if (!same) {
        last_step_equal = false;
      }
      // For a principal ideal at exponent lambda itself the members agree for
      // every later e.
      if (exponent == lambda && same && a.generators().size() == 1) {
        result.chain.push_back(std::move(current));
        break;
      }
    }
    result.chain.push_back(std::move(current));
    previous_exponent = exponent;
  }
  result.ideal = result.chain.back();
  result.stabilized = last_step_equal;
  result.stable_at = result.stabilized ? static_cast<unsigned>(constant_from) + 1 : 0;
  return result;
}

std::uint64_t default_grid(std::uint64_t p) {
  constexpr std::uint64_t cap = 10'000;
  for (std::uint64_t q : {p * p, p}) {
    if (q > cap) continue;
    std::uint64_t g = std::lcm<std::uint64_t>(6, q);
    if (g <= cap) return g;
  }
  return 6;
}

JumpingReport fjump_scan(const PolyIdeal& a, const Rational& lambda_max, std::uint64_t grid, unsigned e_max,
                         const Budget& budget) {
  require_tau_input(a, lambda_max);
  if (!a.inside_maximal_ideal()) throw PreconditionError("fjump_scan needs a proper ideal inside the maximal ideal");
  if (grid == 0) throw PreconditionError("grid denominator must be positive");
  Integer last_k = floor(lambda_max * Integer(static_cast<unsigned long>(grid)));
  std::uint64_t count = to_u64(last_k) + 1;
  if (count > budget.max_products) throw BudgetExceeded("grid has more points than the product budget");

  auto taus = detail::parallel_map(count, [&](std::size_t k) {
    Rational lambda(static_cast<unsigned long>(k), static_cast<unsigned long>(grid));
    lambda.canonicalize();
    return tau(a, lambda, e_max, budget);
  });

  JumpingReport report;
  report.lambda_max = lambda_max;
  report.grid = grid;
  std::optional<KnownThreshold> known = known_fpt(a);
  const bool principal = a.generators().size() == 1;
  for (std::size_t k = 0; k < count; ++k) {
    report.all_stabilized = report.all_stabilized && taus[k].stabilized;
    if (k == 0 || equal(taus[k - 1].ideal, taus[k].ideal, budget)) continue;
    Rational lambda(static_cast<unsigned long>(k), static_cast<unsigned long>(grid));
    lambda.canonicalize();
    bool pinned = (report.jumps.empty() && known && known->value == lambda) ||
                  (principal && lambda.get_den() == 1);
    report.jumps.push_back(Jump{lambda, taus[k - 1].ideal, taus[k].ideal, pinned});
  }
  bool all_pinned = std::all_of(report.jumps.begin(), report.jumps.end(), [](const Jump& j) { return j.pinned; });
  if (all_pinned && report.all_stabilized) report.exactness = JumpExactness::Certified;
  return report;
}

bool check_skoda(const PolyIdeal& a, const Rational& lambda, unsigned e_max, const Budget& budget) {
  require_tau_input(a, lambda);
  const std::size_t m = a.generators().size();
  if (lambda < Rational(static_cast<unsigned long>(m)))
    throw PreconditionError("Skoda needs lambda >= " + std::to_string(m) + ", the number of generators");
  PolyIdeal lhs = stable_tau(a, lambda, e_max, budget);
  PolyIdeal rhs = multiply(a, stable_tau(a, lambda - 1, e_max, budget), budget);
  return equal(lhs, rhs, budget);
}

bool check_p_scaling(const PolyIdeal& a, const Rational& lambda, unsigned e_max, const Budget& budget) {
  require_tau_input(a, lambda);
  Rational scaled = lambda / Integer(static_cast<unsigned long>(a.ring().field().characteristic()));
  PolyIdeal lhs = stable_tau(a, scaled, e_max, budget);
  PolyIdeal rhs = frobenius_root(stable_tau(a, lambda, e_max, budget), 1, budget);
  return equal(lhs, rhs, budget);
}

}  // namespace thresholds
