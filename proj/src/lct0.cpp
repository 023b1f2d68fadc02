#include "thresholds/lct0.hpp"

#include <algorithm>

#include "thresholds/errors.hpp"

namespace thresholds {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

void validate(const LctFamilyInput& input) {
  std::visit(overloaded{
                 [](const Diagonal& d) {
                   if (d.exponents.empty()) throw PreconditionError("diagonal needs at least one exponent");
                   for (auto a : d.exponents)
                     if (a < 1) throw PreconditionError("diagonal exponents must be >= 1");
                 },
                 [](const HomogeneousIsolated& h) {
                   if (h.n < 1 || h.d < 1) throw PreconditionError("homogeneous family needs n, d >= 1");
                 },
                 [](const SmoothSubscheme& s) {
                   if (s.r < 1 || s.r > s.n) throw PreconditionError("codimension must satisfy 1 <= r <= n");
                 },
                 [](const Monomial& m) {
                   if (!m.ideal.is_proper()) throw PreconditionError("the unit ideal has no threshold at the origin");
                 },
                 [](const Node&) {},
             },
             input);
}

ThresholdResult lct_closed_form(const LctFamilyInput& input) {
  validate(input);
  return std::visit(
      overloaded{
          [](const Diagonal& d) {
            Rational s = 0;
            for (auto a : d.exponents) s += make_rational(1, Integer(static_cast<unsigned long>(a)));
            return ThresholdResult::exact(std::min(s, Rational(1)), Method::ClosedForm);
          },
          [](const HomogeneousIsolated& h) {
            Rational s = make_rational(Integer(static_cast<unsigned long>(h.n)), Integer(static_cast<unsigned long>(h.d)));
            return ThresholdResult::exact(std::min(s, Rational(1)), Method::ClosedForm);
          },
          [](const SmoothSubscheme& s) {
            return ThresholdResult::exact(Rational(Integer(static_cast<unsigned long>(s.r))), Method::ClosedForm);
          },
          [](const Monomial& m) {
            return ThresholdResult::exact(lct_monomial(m.ideal).value(), Method::LinearProgram);
          },
          [](const Node&) { return ThresholdResult::exact(Rational(1), Method::ClosedForm); },
      },
      input);
}

Rational general_combination_lct(const Rational& lct_of_ideal) { return std::min(lct_of_ideal, Rational(1)); }

RationalInterval truncation_bound(const Rational& lct_f, std::uint64_t n, std::uint64_t N) {
  if (n == 0 || N == 0) throw PreconditionError("truncation bound needs n, N >= 1");
  if (lct_f < 0 || lct_f > Integer(static_cast<unsigned long>(n)))
    throw PreconditionError("lct must lie in [0, n]");
  Rational slack = make_rational(Integer(static_cast<unsigned long>(n)), Integer(static_cast<unsigned long>(N)) + 1);
  return {std::max(Rational(0), Rational(lct_f - slack)), Rational(lct_f + slack)};
}

std::optional<LctFamilyInput> classify_polynomial(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const std::size_t n = f.ring().nvars();
  if (f.is_monomial())
    return Monomial{MonomialIdeal(n, {f.terms()[0].exponents})};
  // A nonzero linear part makes the hypersurface nonsingular at the origin.
  for (const auto& t : f.terms())
    if (t.exponents.degree() == 1) return SmoothSubscheme{n, 1};
  // Diagonal: one pure power per variable, no other terms.
  std::vector<std::uint64_t> exps;
  std::vector<bool> used(n, false);
  for (const auto& t : f.terms()) {
    std::size_t var = n;
    for (std::size_t i = 0; i < n; ++i)
      if (t.exponents[i] > 0) {
        if (var != n) return std::nullopt;
        var = i;
      }
    if (var == n || used[var]) return std::nullopt;
    used[var] = true;
    exps.push_back(t.exponents[var]);
  }
  std::sort(exps.begin(), exps.end());
  if (exps.size() == 2 && exps[0] == 2 && exps[1] == 2) return Node{};
  return Diagonal{exps};
}

ExtendedRational lct_of_polynomial(const Polynomial& f) {
  if (f.ring().field().is_prime_field())
    throw PreconditionError("log canonical thresholds need a characteristic-zero polynomial");
  if (f.is_zero()) throw PreconditionError("the zero polynomial has no threshold");
  if (!f.ring().field().is_zero(f.constant_term())) return ExtendedRational::infinity();
  auto family = classify_polynomial(f);
  if (!family) throw UnsupportedFamily("polynomial '" + render(f) + "' is outside the closed-form catalog");
  if (auto* m = std::get_if<Monomial>(&*family)) {
    // Principal monomial ideal: lct of (x^u) is min 1/u_i.
    return lct_monomial(m->ideal);
  }
  return lct_closed_form(*family).value();
}

}  // namespace thresholds
