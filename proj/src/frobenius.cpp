#include "thresholds/frobenius.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "thresholds/errors.hpp"
#include "thresholds/frobenius_root.hpp"

namespace thresholds {

namespace {

void require_prime_ring(const PolyIdeal& a) {
  if (!a.ring().field().is_prime_field()) throw PreconditionError("expected an ideal over F_p");
}

void require_nu_input(const PolyIdeal& a) {
  require_prime_ring(a);
  if (a.is_zero()) throw PreconditionError("nu needs a nonzero ideal");
  if (!a.inside_maximal_ideal())
    throw PreconditionError("nu needs an ideal inside (x_1, ..., x_n); a generator has a constant term");
}

// a^i escapes m^{[p^e]} iff the degree-0 part of its root escapes m; the other
// terms are multiples of a ⊆ m.
bool power_escapes(const PolyIdeal& a, std::uint64_t i, unsigned e, const Budget& budget) {
  auto terms = frobenius_root_of_power_terms(a, i, e, budget);
  auto it = terms.find(0);
  if (it == terms.end()) return false;
  return !it->second.inside_maximal_ideal();
}

// nu(e) given lo <= nu(e) <= hi.
std::uint64_t nu_between(const PolyIdeal& a, unsigned e, std::uint64_t lo, std::uint64_t hi, const Budget& budget) {
  std::uint64_t bad = hi + 1;
  while (bad - lo > 1) {
    std::uint64_t mid = lo + (bad - lo) / 2;
    if (power_escapes(a, mid, e, budget))
      lo = mid;
    else
      bad = mid;
  }
  return lo;
}

std::uint64_t generator_count_for_bounds(const PolyIdeal& a) { return a.generators().size(); }

Exponent ideal_order(const PolyIdeal& a) {
  Exponent ord = a.generators().front().order();
  for (const auto& g : a.generators()) ord = std::min(ord, g.order());
  return ord;
}

// Exponents a_i when f is a sum of pure powers of distinct variables.
std::optional<std::vector<std::uint64_t>> diagonal_exponents(const Polynomial& f) {
  std::vector<bool> seen(f.ring().nvars(), false);
  std::vector<std::uint64_t> exps;
  for (const auto& t : f.terms()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i]) ++support, var = i;
    if (support != 1 || seen[var]) return std::nullopt;
    seen[var] = true;
    exps.push_back(t.exponents[var]);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

}  // namespace

void FrobeniusContext::validate() const {
  Field::prime(p);
  if (e_max == 0) throw PreconditionError("e_max must be at least 1");
}

bool in_frobenius_power(const Polynomial& g, unsigned e, const Budget& budget) {
  if (!g.ring().field().is_prime_field()) throw PreconditionError("expected a polynomial over F_p");
  std::uint64_t q = frobenius_modulus(g.ring().field().characteristic(), e, budget);
  return std::all_of(g.terms().begin(), g.terms().end(), [q](const Term& t) {
    return std::any_of(t.exponents.begin(), t.exponents.end(), [q](Exponent x) { return x >= q; });
  });
}

std::uint64_t nu(const PolyIdeal& a, unsigned e, const Budget& budget) {
  require_nu_input(a);
  std::uint64_t q = frobenius_modulus(a.ring().field().characteristic(), e, budget);
  std::uint64_t hi = ExponentVector::checked_mul(a.ring().nvars(), q - 1);
  return nu_between(a, e, 0, hi, budget);
}

std::uint64_t nu_by_expansion(const PolyIdeal& a, unsigned e, const Budget& budget) {
  require_nu_input(a);
  const Ring& ring = a.ring();
  const auto& gens = a.generators();
  if (gens.size() == 1) {
    Polynomial h = Polynomial::constant(ring, ring.field().one());
    for (std::uint64_t i = 0;; ++i) {
      h = multiply(h, gens[0], budget);
      if (in_frobenius_power(h, e, budget)) return i;
    }
  }
  std::vector<Polynomial> level{Polynomial::constant(ring, ring.field().one())};
  std::size_t products = 0;
  for (std::uint64_t i = 0;; ++i) {
    std::vector<Polynomial> next;
    std::set<std::string> seen;
    for (const auto& h : level)
      for (const auto& g : gens) {
        if (++products > budget.max_products)
          throw BudgetExceeded("generator products exceeded " + std::to_string(budget.max_products));
        Polynomial prod = multiply(h, g, budget);
        if (in_frobenius_power(prod, e, budget)) continue;
        if (seen.insert(render(prod)).second) next.push_back(std::move(prod));
      }
    if (next.empty()) return i;
    level = std::move(next);
  }
}

NuSequence nu_sequence(const PolyIdeal& a, unsigned e_max, const Budget& budget) {
  require_nu_input(a);
  NuSequence seq;
  seq.p = a.ring().field().characteristic();
  seq.ideal = a.str();
  const std::uint64_t m = generator_count_for_bounds(a);
  for (unsigned e = 1; e <= e_max; ++e) {
    std::uint64_t value;
    if (e == 1) {
      value = nu(a, 1, budget);
    } else {
      // p nu(e-1) <= nu(e) <= p nu(e-1) + m (p - 1); the upper bound holds
      // because a^{nu+1} ⊆ m^{[q]} forces a^{p nu + m(p-1) + 1} ⊆ m^{[pq]}.
      std::uint64_t prev = seq.values.back();
      std::uint64_t lo = ExponentVector::checked_mul(seq.p, prev);
      std::uint64_t hi = ExponentVector::checked_add(lo, ExponentVector::checked_mul(m, seq.p - 1));
      frobenius_modulus(seq.p, e, budget);
      if (!power_escapes(a, lo, e, budget))
        throw std::logic_error("nu(e+1) >= p nu(e) violated for " + seq.ideal);
      value = nu_between(a, e, lo, hi, budget);
    }
    seq.values.push_back(value);
  }
  return seq;
}

Rational cusp_fpt(std::uint64_t p) {
  if (p <= 3) throw PreconditionError("the cusp formula needs p > 3");
  Field::prime(p);
  Rational base(5, 6);
  if (p % 3 == 1) return base;
  return base - Rational(1) / (Integer(6) * Integer(static_cast<unsigned long>(p)));
}

bool is_ordinary_cubic(const Polynomial& f) {
  const Ring& ring = f.ring();
  if (!ring.field().is_prime_field()) throw PreconditionError("expected a cubic over F_p");
  if (ring.nvars() != 3) throw PreconditionError("expected a cubic in three variables");
  if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3)
    throw PreconditionError("expected a homogeneous cubic");
  std::uint64_t p = ring.field().characteristic();
  ExponentVector target{p - 1, p - 1, p - 1};
  // The multinomial sum is cheap for sparse cubics; dense ones expand f^{p-1}.
  Coefficient c = f.size() <= 4 ? monomial_coefficient(f, p - 1, target) : pow(f, p - 1).coefficient(target);
  return !ring.field().is_zero(c);
}

Rational fpt_cubic_cone(const Polynomial& f) {
  if (is_ordinary_cubic(f)) return Rational(1);
  return Rational(1) - Rational(1) / Integer(static_cast<unsigned long>(f.ring().field().characteristic()));
}

Rational fpt_monomial(const MonomialIdeal& a, std::uint64_t p) {
  Field::prime(p);
  if (!a.is_proper() || a.generators().empty()) throw PreconditionError("expected a proper nonzero monomial ideal");
  return lct_monomial(a).value();
}

std::optional<KnownThreshold> known_fpt(const PolyIdeal& a) {
  require_prime_ring(a);
  if (a.is_zero() || !a.inside_maximal_ideal()) return std::nullopt;
  const std::uint64_t p = a.ring().field().characteristic();
  if (auto mono = as_monomial_ideal(a)) return KnownThreshold{lct_monomial(*mono).value(), "monomial"};
  if (a.generators().size() != 1) return std::nullopt;

  const Polynomial& f = a.generators().front();
  Exponent ord = f.order();
  if (ord == 1) return KnownThreshold{Rational(1), "nonsingular"};
  if (a.ring().nvars() == 1) return KnownThreshold{Rational(1, static_cast<unsigned long>(ord)), "one variable"};

  auto exps = diagonal_exponents(f);
  if (!exps) return std::nullopt;
  if (*exps == std::vector<std::uint64_t>{2, 3} && p > 3) return KnownThreshold{cusp_fpt(p), "cusp"};
  if (*exps == std::vector<std::uint64_t>{3, 3, 3} && p > 3 && a.ring().nvars() == 3)
    return KnownThreshold{fpt_cubic_cone(f), "fermat cubic"};
  Integer modulus = 1;
  Rational sum = 0;
  for (auto x : *exps) {
    modulus *= Integer(static_cast<unsigned long>(x));
    sum += Rational(1, static_cast<unsigned long>(x));
  }
  if (Integer(static_cast<unsigned long>(p)) % modulus == 1)
    return KnownThreshold{std::min(sum, Rational(1)), "diagonal, p = 1 mod " + modulus.get_str()};
  return std::nullopt;
}

FptReport fpt_enclosure(const PolyIdeal& a, const FrobeniusContext& ctx, const Budget& budget) {
  ctx.validate();
  require_nu_input(a);
  if (a.ring().field().characteristic() != ctx.p || a.ring().nvars() != ctx.n)
    throw RingMismatch("ideal does not live in the ring of the Frobenius context");

  NuSequence seq = nu_sequence(a, ctx.e_max, budget);
  const std::uint64_t m = generator_count_for_bounds(a);
  Integer q = 1;
  Rational hi;
  bool have_hi = false;
  Rational lo;
  for (unsigned e = 1; e <= ctx.e_max; ++e) {
    q *= Integer(static_cast<unsigned long>(ctx.p));
    Rational upper(Integer(static_cast<unsigned long>(seq.at(e) + m)), q);
    upper.canonicalize();
    if (!have_hi || upper < hi) hi = upper, have_hi = true;
    lo = Rational(Integer(static_cast<unsigned long>(seq.at(e))), q);
    lo.canonicalize();
  }
  Exponent ord = ideal_order(a);
  Rational floor_bound(1, static_cast<unsigned long>(ord));
  Rational ceiling_bound(static_cast<unsigned long>(ctx.n), static_cast<unsigned long>(ord));
  floor_bound.canonicalize();
  ceiling_bound.canonicalize();
  lo = std::max(lo, floor_bound);
  hi = std::min(hi, ceiling_bound);
  if (lo > hi) throw std::logic_error("empty fpt enclosure for " + seq.ideal);

  RationalInterval enclosure{lo, hi};
  if (auto known = known_fpt(a)) {
    if (!enclosure.contains(known->value))
      throw std::logic_error("closed-form fpt " + to_string(known->value) + " outside the nu enclosure for " +
                             seq.ideal);
    Method method = known->family == "monomial" ? Method::LinearProgram : Method::ClosedForm;
    return FptReport{ThresholdResult::exact(known->value, method, true), std::move(seq), enclosure, known->family};
  }
  ThresholdResult result = lo == hi ? ThresholdResult::exact(lo, Method::NuLimit, true)
                                    : ThresholdResult::enclosure(lo, hi, Method::NuLimit, false);
  return FptReport{result, std::move(seq), enclosure, ""};
}

}  // namespace thresholds
