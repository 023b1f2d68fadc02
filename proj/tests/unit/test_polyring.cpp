#include <gtest/gtest.h>

#include <limits>

#include "generators.hpp"
#include "thresholds/errors.hpp"
#include "thresholds/polyring.hpp"

using namespace thresholds;
using namespace thresholds::testing;

namespace {

Ring letters(std::size_t n, Field f) { return Ring(n, f, VariableNames::Letters); }

Polynomial P(const std::string& text, const Ring& ring) { return parse_polynomial(text, ring); }

struct Triple {
  PolySpec a, b, c;
};

Gen<Triple> triples(std::uint64_t p) {
  auto polys = polynomials(3, p, 4, 3);
  Gen<Triple> g;
  g.generate = [polys](Rng& rng) { return Triple{polys.generate(rng), polys.generate(rng), polys.generate(rng)}; };
  g.shrink = [polys](const Triple& t) {
    std::vector<Triple> out;
    for (auto& s : polys.shrink(t.a)) out.push_back({s, t.b, t.c});
    for (auto& s : polys.shrink(t.b)) out.push_back({t.a, s, t.c});
    for (auto& s : polys.shrink(t.c)) out.push_back({t.a, t.b, s});
    return out;
  };
  g.show = [](const Triple& t) {
    return "(" + render(to_poly(t.a)) + "), (" + render(to_poly(t.b)) + "), (" + render(to_poly(t.c)) + ")";
  };
  return g;
}

}  // namespace

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(Field::prime(1), PreconditionError);
  EXPECT_THROW(Field::prime(4), PreconditionError);
  EXPECT_THROW(Field::prime(91), PreconditionError);
  EXPECT_THROW(Field::prime(std::uint64_t{1} << 33), PreconditionError);
  EXPECT_NO_THROW(Field::prime(4294967291ULL));
}

TEST(Field, ResidueArithmetic) {
  Field f = Field::prime(7);
  auto three = f.from_integer(3);
  EXPECT_EQ(f.to_rational(f.mul(three, f.inv(three))), 1);
  EXPECT_EQ(f.to_rational(f.from_integer(-1)), 6);
  EXPECT_EQ(f.to_rational(f.from_rational(Rational(1, 2))), 4);
  EXPECT_THROW(f.from_rational(Rational(1, 7)), PreconditionError);
  EXPECT_THROW(f.inv(f.zero()), PreconditionError);
}

TEST(Polynomial, CanonicalTermsMakeEqualityStructural) {
  Ring r = letters(2, Field::rationals());
  EXPECT_EQ(P("x*y + y*x", r), P("2*x*y", r));
  EXPECT_TRUE((P("x^2 - x^2", r)).is_zero());
  EXPECT_EQ(P("(x+y)^2", r), P("x^2 + 2*x*y + y^2", r));
}

TEST(Polynomial, DegreeAndOrder) {
  Ring r = letters(3, Field::integers());
  auto f = P("x^2*y + z^5 + x*y", r);
  EXPECT_EQ(f.total_degree(), 5u);
  EXPECT_EQ(f.order(), 2u);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_TRUE(P("x^3 + y^3 + z^3", r).is_homogeneous());
}

TEST(Polynomial, FrobeniusIsAdditiveInCharacteristicP) {
  Ring r = letters(2, Field::prime(5));
  EXPECT_EQ(pow(P("x + y", r), 5), P("x^5 + y^5", r));
  EXPECT_EQ(pow(P("x + y", r), 25), P("x^25 + y^25", r));
}

TEST(Polynomial, RingMismatchIsReported) {
  auto a = P("x", letters(2, Field::prime(5)));
  auto b = P("x", letters(2, Field::prime(7)));
  auto c = P("x", letters(3, Field::prime(5)));
  EXPECT_THROW(a + b, RingMismatch);
  EXPECT_THROW(a * c, RingMismatch);
}

TEST(Polynomial, ProductBudget) {
  Ring r = letters(2, Field::rationals());
  Budget tight;
  tight.max_terms = 10;
  EXPECT_THROW(pow(P("x + y + 1", r), 10, tight), BudgetExceeded);
  Ring f = letters(2, Field::prime(101));
  EXPECT_THROW(pow(P("x + y + 1", f), 50, tight), BudgetExceeded);
}

TEST(Parser, ErrorsCarryPosition) {
  Ring r = letters(2, Field::rationals());
  try {
    P("x + * y", r);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P("x + (y", r), ParseError);
  EXPECT_THROW(P("w", r), ParseError);
  EXPECT_THROW(P("z", r), ParseError);
}

TEST(Parser, InferRing) {
  auto r = infer_ring({"x^2 + y^3"}, Field::rationals());
  EXPECT_EQ(r.nvars(), 2u);
  EXPECT_EQ(r.names(), VariableNames::Letters);
  auto s = infer_ring({"x1 + x4"}, Field::prime(3));
  EXPECT_EQ(s.nvars(), 4u);
  EXPECT_EQ(s.names(), VariableNames::Indexed);
}

TEST(Parser, RoundTripsLargePolynomial) {
  Ring r(4, Field::integers(), VariableNames::Indexed);
  Rng rng(7);
  std::vector<Term> terms;
  for (int k = 0; k < 50; ++k) {
    ExponentVector u(4);
    for (std::size_t i = 0; i < 4; ++i) u.set(i, uniform(rng, 0, 6));
    long c = static_cast<long>(uniform(rng, 1, 1000)) * (uniform(rng, 0, 1) ? 1 : -1);
    terms.push_back({u, r.field().from_integer(Integer(c))});
  }
  auto f = Polynomial::from_terms(r, terms);
  EXPECT_GE(f.size(), 40u);
  EXPECT_EQ(parse_polynomial(render(f), r), f);
}

TEST(Properties, RingLaws) {
  for (std::uint64_t p : {0ULL, 2ULL, 5ULL}) {
    auto outcome = check_property<Triple>(
        "ring laws over " + std::to_string(p), triples(p),
        [](const Triple& t) {
          auto a = to_poly(t.a), b = to_poly(t.b), c = to_poly(t.c);
          return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a &&
                 (a + b) + c == a + (b + c) && a + b == b + a && (a - a).is_zero();
        },
        60);
    EXPECT_TRUE(outcome) << outcome.message;
  }
}

TEST(Properties, PowerMatchesRepeatedProduct) {
  for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 7ULL}) {
    auto gen = polynomials(3, p, 4, 2);
    Gen<std::pair<PolySpec, std::uint64_t>> g;
    g.generate = [gen](Rng& rng) { return std::make_pair(gen.generate(rng), uniform(rng, 0, 20)); };
    g.shrink = [gen](const auto& pr) {
      std::vector<std::pair<PolySpec, std::uint64_t>> out;
      if (pr.second > 0) out.emplace_back(pr.first, pr.second - 1);
      for (auto& s : gen.shrink(pr.first)) out.emplace_back(s, pr.second);
      return out;
    };
    g.show = [](const auto& pr) { return "(" + render(to_poly(pr.first)) + ")^" + std::to_string(pr.second); };
    auto outcome = check_property<std::pair<PolySpec, std::uint64_t>>(
        "pow over " + std::to_string(p), g,
        [](const auto& pr) {
          auto f = to_poly(pr.first);
          Polynomial h = Polynomial::constant(f.ring(), f.ring().field().one());
          for (std::uint64_t i = 0; i < pr.second; ++i) h = h * f;
          return pow(f, pr.second) == h;
        },
        60);
    EXPECT_TRUE(outcome) << outcome.message;
  }
}

TEST(Properties, RenderParseRoundTrip) {
  auto outcome = check_property<PolySpec>(
      "render/parse", polynomials(3, 0, 8, 6),
      [](const PolySpec& s) {
        auto f = to_poly(s);
        return parse_polynomial(render(f), f.ring()) == f;
      },
      200);
  EXPECT_TRUE(outcome) << outcome.message;
}

namespace {

// sum_w u_w^{p^e} x^w, rebuilt with plain powering.
Polynomial reexpand(const FrobeniusComponents& parts, const Ring& ring, std::uint64_t q) {
  Polynomial h(ring);
  for (const auto& [w, u] : parts) h = h + pow(u, q).shifted(w);
  return h;
}

}  // namespace

TEST(Properties, FrobeniusDecompositionReexpands) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
    for (unsigned e : {1u, 2u}) {
      std::uint64_t q = e == 1 ? p : p * p;
      auto outcome = check_property<PolySpec>(
          "decompose p=" + std::to_string(p) + " e=" + std::to_string(e), polynomials(2, p, 6, 12),
          [&](const PolySpec& s) {
            auto h = to_poly(s);
            auto parts = frobenius_decompose(h, e);
            for (const auto& [w, u] : parts) {
              if (u.is_zero()) return false;
              for (auto x : w)
                if (x >= q) return false;
            }
            auto back = reexpand(parts, h.ring(), q);
            return back == h && frobenius_decompose(back, e) == parts;
          },
          80);
      EXPECT_TRUE(outcome) << outcome.message;
    }
}

TEST(FrobeniusDecompose, Example) {
  Ring r = letters(2, Field::prime(2));
  auto parts = frobenius_decompose(P("x^3*y + x^2 + y^5", r), 1);
  // x^3 y = (x)^2 * xy, x^2 = (x)^2 * 1, y^5 = (y^2)^2 * y
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts.at(ExponentVector{1, 1}), P("x", r));
  EXPECT_EQ(parts.at(ExponentVector{0, 0}), P("x", r));
  EXPECT_EQ(parts.at(ExponentVector{0, 1}), P("y^2", r));
  EXPECT_THROW(frobenius_decompose(P("x", letters(1, Field::rationals())), 1), PreconditionError);
  EXPECT_THROW(frobenius_decompose(P("x", r), 0), PreconditionError);
}

TEST(MonomialCoefficient, MatchesExpansion) {
  for (std::uint64_t p : {0ULL, 3ULL, 7ULL}) {
    Rng rng(p + 11);
    auto gen = polynomials(3, p, 4, 3);
    for (int trial = 0; trial < 25; ++trial) {
      auto f = to_poly(gen.generate(rng));
      std::uint64_t k = uniform(rng, 0, 6);
      auto full = pow(f, k);
      for (const auto& t : full.terms())
        EXPECT_TRUE(f.ring().field().to_rational(monomial_coefficient(f, k, t.exponents)) ==
                    f.ring().field().to_rational(t.coefficient))
            << render(f) << " ^ " << k;
      ExponentVector miss{9, 9, 9};
      EXPECT_TRUE(f.ring().field().to_rational(monomial_coefficient(f, k, miss)) ==
                  f.ring().field().to_rational(full.coefficient(miss)));
    }
  }
}

TEST(MonomialCoefficient, LucasMatchesExactMultinomial) {
  Rng rng(3);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL})
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::uint64_t> parts(uniform(rng, 1, 4));
      for (auto& x : parts) x = uniform(rng, 0, 40);
      Integer exact = 1;
      std::uint64_t total = 0;
      for (auto c : parts) {
        total += c;
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), total, c);
        exact *= b;
      }
      Integer residue = exact % Integer(static_cast<unsigned long>(p));
      EXPECT_EQ(multinomial_mod_p(parts, p), residue.get_ui()) << show_vector(parts) << " mod " << p;
    }
}

TEST(ExponentVector, OverflowIsChecked) {
  ExponentVector big{std::numeric_limits<Exponent>::max() - 1};
  EXPECT_THROW(big + ExponentVector{5}, BudgetExceeded);
  EXPECT_THROW(big.scaled(2), BudgetExceeded);
}

TEST(ExponentVector, Grevlex) {
  EXPECT_TRUE(grevlex_greater({1, 1, 0}, {1, 0, 1}));
  EXPECT_FALSE(grevlex_greater({0, 0, 3}, {1, 1, 1}));
  EXPECT_TRUE(grevlex_greater({0, 0, 3}, {2, 0, 0}));
  EXPECT_TRUE(grevlex_greater({2, 0, 1}, {0, 0, 2}));
  EXPECT_TRUE(lex_greater({1, 0, 0}, {0, 5, 5}));
}
