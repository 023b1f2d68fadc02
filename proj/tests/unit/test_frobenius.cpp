#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "thresholds/errors.hpp"
#include "thresholds/frobenius.hpp"

using namespace thresholds;
using namespace thresholds::testing;

namespace {

Ring F(std::uint64_t p, std::size_t n = 2) {
  return Ring(n, Field::prime(p), n <= 3 ? VariableNames::Letters : VariableNames::Indexed);
}
PolyIdeal I(const std::string& text, const Ring& ring) { return parse_ideal(text, ring); }

std::uint64_t power_of(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  while (e--) q *= p;
  return q;
}

// Some term has every exponent below q.
bool escapes(const Polynomial& g, std::uint64_t q) {
  for (const auto& t : g.terms()) {
    bool inside = false;
    for (auto x : t.exponents) inside = inside || x >= q;
    if (!inside) return true;
  }
  return false;
}

// nu by brute force: the set of distinct degree-i generator products,
// grown one factor at a time until every product lies in m^{[q]}.
std::uint64_t nu_oracle(const PolyIdeal& a, unsigned e) {
  std::uint64_t q = power_of(a.ring().field().characteristic(), e);
  std::set<std::string> seen;
  std::vector<Polynomial> level{Polynomial::constant(a.ring(), a.ring().field().one())};
  for (std::uint64_t i = 0;; ++i) {
    bool any = false;
    for (const auto& g : level) any = any || escapes(g, q);
    if (!any) return i - 1;
    std::vector<Polynomial> next;
    seen.clear();
    for (const auto& g : level) {
      if (!escapes(g, q)) continue;
      for (const auto& h : a.generators()) {
        auto prod = g * h;
        if (seen.insert(render(prod)).second) next.push_back(prod);
      }
    }
    level = std::move(next);
  }
}

bool usable(const PolyIdeal& a) { return !a.is_zero() && a.inside_maximal_ideal(); }

}  // namespace

TEST(Nu, Examples) {
  EXPECT_EQ(nu(I("x^2 + y^3", F(5)), 1), 3u);
  EXPECT_EQ(nu(I("x^2 + y^3", F(7)), 1), 5u);
  auto m = I("x, y, z", F(3, 3));
  EXPECT_EQ(nu(m, 1), 6u);
  EXPECT_EQ(nu(m, 2), 24u);
  EXPECT_EQ(nu(m, 3), 78u);
  EXPECT_EQ(nu(I("x^3", F(2, 1)), 2), 1u);
  EXPECT_EQ(nu(I("x*y", F(5)), 2), 24u);
}

TEST(Nu, Preconditions) {
  EXPECT_THROW(nu(PolyIdeal::zero(F(5)), 1), PreconditionError);
  EXPECT_THROW(nu(I("x + 1", F(5)), 1), PreconditionError);
  Ring q(2, Field::rationals(), VariableNames::Letters);
  EXPECT_THROW(nu(I("x", q), 1), PreconditionError);
  EXPECT_THROW(nu(I("x", F(5)), 0), PreconditionError);
}

TEST(Nu, InFrobeniusPower) {
  auto r = F(3);
  EXPECT_TRUE(in_frobenius_power(parse_polynomial("x^3 + y^4*x", r), 1));
  EXPECT_FALSE(in_frobenius_power(parse_polynomial("x^3 + x^2*y^2", r), 1));
  EXPECT_TRUE(in_frobenius_power(Polynomial(r), 2));
}

TEST(Nu, AgreesWithBruteForce) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    auto outcome = check_property<IdealSpec>(
        "nu against brute force over F_" + std::to_string(p), ideals(2, p, 2, 3, 3, true),
        [](const IdealSpec& s) {
          auto a = to_ideal(s);
          if (!usable(a)) return true;
          for (unsigned e : {1u, 2u}) {
            auto expected = nu_oracle(a, e);
            if (nu(a, e) != expected || nu_by_expansion(a, e) != expected) return false;
          }
          return true;
        },
        40);
    EXPECT_TRUE(outcome) << outcome.message;
  }
}

TEST(Nu, SequenceProperties) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    auto outcome = check_property<IdealSpec>(
        "nu(e+1) >= p nu(e) over F_" + std::to_string(p), ideals(2, p, 3, 3, 4, true),
        [p](const IdealSpec& s) {
          auto a = to_ideal(s);
          if (!usable(a)) return true;
          auto seq = nu_sequence(a, 3);
          std::uint64_t m = a.generators().size();
          for (unsigned e = 1; e < 3; ++e) {
            if (seq.at(e + 1) < p * seq.at(e)) return false;
            if (seq.at(e + 1) > p * seq.at(e) + m * (p - 1)) return false;
          }
          return true;
        },
        40);
    EXPECT_TRUE(outcome) << outcome.message;
  }
}

TEST(Nu, PrincipalUpperRecursion) {
  auto outcome = check_property<PolySpec>(
      "nu(e+1) <= p nu(e) + p - 1", polynomials(2, 3, 4, 5, true),
      [](const PolySpec& s) {
        auto f = to_poly(s);
        if (f.is_zero()) return true;
        PolyIdeal a(f.ring(), {f});
        auto seq = nu_sequence(a, 3);
        for (unsigned e = 1; e < 3; ++e)
          if (seq.at(e + 1) > 3 * seq.at(e) + 2) return false;
        return true;
      },
      60);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Nu, MonotoneInIdeal) {
  auto gen = ideals(2, 3, 2, 3, 3, true);
  Gen<std::pair<IdealSpec, IdealSpec>> pairs;
  pairs.generate = [gen](Rng& rng) {
    auto a = gen.generate(rng);
    auto b = a;
    auto extra = gen.generate(rng);
    b.gens.insert(b.gens.end(), extra.gens.begin(), extra.gens.end());
    return std::make_pair(a, b);
  };
  pairs.show = [](const auto& pr) { return show(pr.first) + " inside " + show(pr.second); };
  auto outcome = check_property<std::pair<IdealSpec, IdealSpec>>(
      "a inside b gives nu_a <= nu_b", pairs,
      [](const auto& pr) {
        auto a = to_ideal(pr.first), b = to_ideal(pr.second);
        if (!usable(a) || !usable(b)) return true;
        for (unsigned e : {1u, 2u})
          if (nu(a, e) > nu(b, e)) return false;
        return true;
      },
      40);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Nu, PowerIdentity) {
  auto outcome = check_property<IdealSpec>(
      "r nu_{a^r} <= nu_a <= r (nu_{a^r} + 1) - 1", ideals(2, 3, 2, 2, 3, true),
      [](const IdealSpec& s) {
        auto a = to_ideal(s);
        if (!usable(a)) return true;
        for (std::uint64_t r : {2ULL, 3ULL}) {
          auto ar = power(a, r);
          for (unsigned e : {1u, 2u}) {
            auto base = nu(a, e), pw = nu(ar, e);
            if (r * pw > base || base > r * (pw + 1) - 1) return false;
          }
        }
        return true;
      },
      30);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Nu, Subadditive) {
  auto gen = ideals(2, 5, 2, 2, 3, true);
  Gen<std::pair<IdealSpec, IdealSpec>> pairs;
  pairs.generate = [gen](Rng& rng) { return std::make_pair(gen.generate(rng), gen.generate(rng)); };
  pairs.show = [](const auto& pr) { return show(pr.first) + " + " + show(pr.second); };
  auto outcome = check_property<std::pair<IdealSpec, IdealSpec>>(
      "nu_{a+b} <= nu_a + nu_b + 1", pairs,
      [](const auto& pr) {
        auto a = to_ideal(pr.first), b = to_ideal(pr.second);
        if (!usable(a) || !usable(b)) return true;
        for (unsigned e : {1u, 2u})
          if (nu(a + b, e) > nu(a, e) + nu(b, e) + 1) return false;
        return true;
      },
      40);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Fpt, ClosedFormsInsideEnclosure) {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
    auto report = fpt_enclosure(I("x^2 + y^3", F(p)), {p, 2, 3});
    EXPECT_TRUE(report.enclosure.contains(cusp_fpt(p))) << p;
    EXPECT_TRUE(report.threshold.is_exact());
    EXPECT_EQ(report.threshold.value(), cusp_fpt(p));
    EXPECT_EQ(report.family, "cusp");
  }
  auto mono = fpt_enclosure(I("x^2, x*y^3, y^5", F(3)), {3, 2, 3});
  Rational mono_lct = lct_monomial(parse_monomial_ideal("x^2, x*y^3, y^5")).value();
  EXPECT_TRUE(mono.enclosure.contains(mono_lct));
  EXPECT_EQ(mono.threshold.value(), mono_lct);
  auto maximal = fpt_enclosure(I("x, y, z", F(2, 3)), {2, 3, 3});
  EXPECT_EQ(maximal.threshold.value(), 3);
}

TEST(Fpt, EnclosureWithinOrderBounds) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    auto outcome = check_property<IdealSpec>(
        "1/ord <= enclosure <= n/ord over F_" + std::to_string(p), ideals(2, p, 2, 3, 4, true),
        [p](const IdealSpec& s) {
          auto a = to_ideal(s);
          if (!usable(a)) return true;
          auto report = fpt_enclosure(a, {p, 2, 2});
          Exponent ord = ~Exponent{0};
          for (const auto& g : a.generators()) ord = std::min(ord, g.order());
          Rational lo(1, static_cast<unsigned long>(ord)), hi(2, static_cast<unsigned long>(ord));
          return lo <= report.enclosure.lo && report.enclosure.lo <= report.enclosure.hi &&
                 report.enclosure.hi <= hi && report.threshold.lo() <= report.threshold.hi();
        },
        40);
    EXPECT_TRUE(outcome) << outcome.message;
  }
}

TEST(Fpt, OneVariableIsReciprocalOrder) {
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL})
    for (std::uint64_t d = 1; d <= 9; ++d) {
      auto r = F(p, 1);
      auto f = parse_polynomial("x^" + std::to_string(d) + " + x^" + std::to_string(d + 2), r);
      auto report = fpt_enclosure(PolyIdeal(r, {f}), {p, 1, 3});
      ASSERT_TRUE(report.threshold.is_exact());
      EXPECT_EQ(report.threshold.value(), Rational(1, static_cast<unsigned long>(d)));
      EXPECT_TRUE(report.enclosure.contains(Rational(1, static_cast<unsigned long>(d))));
    }
}

TEST(Fpt, CuspFormula) {
  EXPECT_EQ(cusp_fpt(7), Rational(5, 6));
  EXPECT_EQ(cusp_fpt(5), Rational(5, 6) - Rational(1, 30));
  EXPECT_EQ(cusp_fpt(11), Rational(5, 6) - Rational(1, 66));
  EXPECT_THROW(cusp_fpt(3), PreconditionError);
}

TEST(Fpt, KnownFamilies) {
  auto known = known_fpt(I("x^2 + y^3", F(13)));
  ASSERT_TRUE(known);
  EXPECT_EQ(known->value, Rational(5, 6));
  EXPECT_FALSE(known_fpt(I("x^2 + y^3", F(3))));
  // 2*3*4 = 24 divides 73 - 1.
  auto diag = known_fpt(I("x^2 + y^3 + z^4", F(73, 3)));
  ASSERT_TRUE(diag);
  EXPECT_EQ(diag->value, 1);
  EXPECT_FALSE(known_fpt(I("x^2*y + y^3", F(5))));
  auto smooth = known_fpt(I("x + y^2", F(5)));
  ASSERT_TRUE(smooth);
  EXPECT_EQ(smooth->value, 1);
}

TEST(Fpt, FermatCubic) {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
    auto f = parse_polynomial("x^3 + y^3 + z^3", F(p, 3));
    bool ordinary = p % 3 == 1;
    EXPECT_EQ(is_ordinary_cubic(f), ordinary) << p;
    EXPECT_EQ(fpt_cubic_cone(f), ordinary ? Rational(1) : 1 - Rational(1, static_cast<unsigned long>(p)));
    auto report = fpt_enclosure(PolyIdeal(f.ring(), {f}), {p, 3, 2});
    EXPECT_TRUE(report.enclosure.contains(fpt_cubic_cone(f))) << p;
  }
  EXPECT_THROW(is_ordinary_cubic(parse_polynomial("x^3 + y^2", F(5, 3))), PreconditionError);
}

TEST(Fpt, ContextValidation) {
  EXPECT_THROW((FrobeniusContext{4, 2, 2}.validate()), PreconditionError);
  EXPECT_THROW((FrobeniusContext{5, 2, 0}.validate()), PreconditionError);
  EXPECT_THROW(fpt_enclosure(I("x, y", F(5)), {7, 2, 2}), Error);
}
