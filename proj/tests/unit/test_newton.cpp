#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "thresholds/errors.hpp"
#include "thresholds/newton.hpp"

using namespace thresholds;
using namespace thresholds::testing;

namespace {

MonomialIdeal M(const std::string& text, std::size_t n = 0) { return parse_monomial_ideal(text, n); }

Rational lct(const MonomialIdeal& a) { return lct_monomial(a).value(); }

Rational q(std::uint64_t x) { return Rational(Integer(static_cast<unsigned long>(x))); }

// Smallest t with (t, t) in the Newton polygon: minimize max(w1, w2) over
// segments between generators. The optimum of a convex piecewise-linear
// function on a polygon lies on an edge, so pairs suffice.
Rational planar_diagonal_hit(const MonomialIdeal& a) {
  const auto& g = a.generators();
  Rational best = -1;
  auto consider = [&](const Rational& t) {
    if (best < 0 || t < best) best = t;
  };
  for (const auto& u : g) consider(std::max(q(u[0]), q(u[1])));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      // w(s) = s u + (1 - s) v; crossing where w1 = w2.
      Rational du = q(g[i][0]) - q(g[i][1]);
      Rational dv = q(g[j][0]) - q(g[j][1]);
      if (du * dv >= 0) continue;
      Rational s = -dv / (du - dv);
      consider(s * q(g[i][0]) + (1 - s) * q(g[j][0]));
    }
  return best;
}

// 2 * area of the region of the quadrant below the polygon, by the shoelace
// formula over the lower convex hull of the generators.
Integer planar_multiplicity(const MonomialIdeal& a) {
  std::vector<std::pair<Integer, Integer>> pts;
  for (const auto& u : a.generators())
    pts.emplace_back(Integer(static_cast<unsigned long>(u[0])), Integer(static_cast<unsigned long>(u[1])));
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<Integer, Integer>> hull;
  for (const auto& pt : pts) {
    if (!hull.empty() && pt.second >= hull.back().second) continue;
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& m = hull.back();
      Integer cross = (m.first - o.first) * (pt.second - o.second) - (m.second - o.second) * (pt.first - o.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  // Polygon (0,0), (0, b_0), hull..., (a_k, 0).
  std::vector<std::pair<Integer, Integer>> poly{{0, 0}};
  poly.insert(poly.end(), hull.begin(), hull.end());
  Integer twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p0 = poly[i];
    const auto& p1 = poly[(i + 1) % poly.size()];
    twice += p0.first * p1.second - p1.first * p0.second;
  }
  return abs(twice);
}

Gen<std::pair<MonoSpec, MonoSpec>> nested_pairs(std::size_t max_n) {
  auto base = monomial_ideals(max_n, 3, 5, false);
  Gen<std::pair<MonoSpec, MonoSpec>> g;
  g.generate = [base](Rng& rng) {
    MonoSpec a = base.generate(rng);
    MonoSpec b = a;
    std::size_t extra = uniform(rng, 1, 2);
    for (std::size_t k = 0; k < extra; ++k) {
      Exps u(a.n);
      for (auto& x : u) x = uniform(rng, 0, 3);
      if (std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) u[0] = 1;
      b.gens.push_back(u);
    }
    return std::make_pair(a, b);
  };
  g.show = [](const auto& pr) { return show(pr.first) + " inside " + show(pr.second); };
  return g;
}

}  // namespace

TEST(MonomialIdeal, MinimalGenerators) {
  auto a = M("x^2, x^3*y, y^4, x*y^5");
  EXPECT_EQ(a.generators().size(), 2u);
  EXPECT_EQ(a, M("y^4, x^2"));
  EXPECT_TRUE(a.is_m_primary());
  EXPECT_FALSE(M("x*y").is_m_primary());
  EXPECT_FALSE(M("1, x", 2).is_proper());
  EXPECT_EQ(a.order(), 2u);
}

TEST(MonomialIdeal, Operations) {
  auto a = M("x^2, y");
  auto b = M("x, y^3");
  EXPECT_EQ(a * b, M("x^3, x*y, y^4"));
  EXPECT_EQ(a + b, M("x, y"));
  EXPECT_EQ(power(M("x, y"), 2), M("x^2, x*y, y^2"));
  EXPECT_TRUE(is_subset(a * b, a));
  EXPECT_FALSE(is_subset(a, a * b));
  EXPECT_EQ(disjoint_sum(M("x^2"), M("x^3")).nvars(), 2u);
  EXPECT_EQ(disjoint_sum(M("x^2"), M("x^3")), M("x^2, y^3"));
}

TEST(Lct, Examples) {
  EXPECT_EQ(lct(M("x^2, y^3")), Rational(5, 6));
  EXPECT_EQ(lct(M("x^2*y, x*y^3")), Rational(3, 5));
  EXPECT_EQ(lct(M("x, y, z")), 3);
  EXPECT_EQ(lct(M("x*y*z")), 1);
  EXPECT_EQ(lct(M("x^2*y^3")), Rational(1, 3));
  EXPECT_TRUE(lct_monomial(M("1", 2)).is_infinite());
}

TEST(Lct, PlanarOracle) {
  auto outcome = check_property<MonoSpec>(
      "lct against planar segment search", monomial_ideals(2, 5, 9, false, 2),
      [](const MonoSpec& s) {
        auto a = to_ideal(s);
        if (!a.is_proper()) return true;
        return diagonal_hit(a) == planar_diagonal_hit(a) && lct(a) == 1 / planar_diagonal_hit(a);
      },
      300);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Lct, DiagonalClosedForm) {
  for (std::uint64_t a = 1; a <= 10; ++a)
    for (std::uint64_t b = 1; b <= 10; ++b) {
      MonomialIdeal ideal(2, {ExponentVector{a, 0}, ExponentVector{0, b}});
      EXPECT_EQ(lct(ideal), Rational(1) / q(a) + Rational(1) / q(b));
    }
}

TEST(Lct, Scaling) {
  auto outcome = check_property<MonoSpec>(
      "lct(a^r) = lct(a)/r", monomial_ideals(3, 4, 6, false),
      [](const MonoSpec& s) {
        auto a = to_ideal(s);
        for (std::uint64_t r : {2ULL, 3ULL, 5ULL})
          if (lct(a.scaled(r)) != lct(a) / q(r) || lct(power(a, r)) != lct(a) / q(r)) return false;
        return true;
      },
      100);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Lct, Monotonicity) {
  auto outcome = check_property<std::pair<MonoSpec, MonoSpec>>(
      "a inside b gives lct(a) <= lct(b)", nested_pairs(3),
      [](const auto& pr) {
        auto a = to_ideal(pr.first), b = to_ideal(pr.second);
        if (!is_subset(a, b)) return false;
        if (!b.is_proper()) return true;
        return lct(a) <= lct(b);
      },
      150);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Lct, OrderBounds) {
  auto outcome = check_property<MonoSpec>(
      "1/ord <= lct <= n/ord", monomial_ideals(4, 4, 7, false),
      [](const MonoSpec& s) {
        auto a = to_ideal(s);
        Rational ord = q(a.order());
        return Rational(1) / ord <= lct(a) && lct(a) <= q(a.nvars()) / ord;
      },
      150);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Lct, DisjointSumAdds) {
  auto ideals = monomial_ideals(2, 3, 6, false);
  Gen<std::pair<MonoSpec, MonoSpec>> pairs;
  pairs.generate = [ideals](Rng& rng) { return std::make_pair(ideals.generate(rng), ideals.generate(rng)); };
  pairs.show = [](const auto& pr) { return show(pr.first) + " | " + show(pr.second); };
  auto outcome = check_property<std::pair<MonoSpec, MonoSpec>>(
      "disjoint sum", pairs,
      [](const auto& pr) {
        auto a = to_ideal(pr.first), b = to_ideal(pr.second);
        return lct(disjoint_sum(a, b)) == lct(a) + lct(b);
      },
      100);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Lct, ContainsPointIsTightAtThreshold) {
  auto outcome = check_property<MonoSpec>(
      "tightness", monomial_ideals(3, 4, 6, false),
      [](const MonoSpec& s) {
        auto a = to_ideal(s);
        NewtonPolyhedron poly(a);
        Rational c = lct(a);
        Rational above = c + Rational(1, 1000);
        return contains_point(poly, RationalPoint::diagonal(a.nvars(), 1 / c)) &&
               !contains_point(poly, RationalPoint::diagonal(a.nvars(), 1 / above));
      },
      100);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(ContainsPoint, Examples) {
  NewtonPolyhedron poly(M("x^2, y^3"));
  EXPECT_TRUE(contains_point(poly, parse_point("1,3/2")));
  EXPECT_TRUE(contains_point(poly, parse_point("2,0")));
  EXPECT_FALSE(contains_point(poly, parse_point("1,1")));
  EXPECT_TRUE(contains_point(poly, parse_point("5,5")));
  EXPECT_THROW(contains_point(poly, parse_point("1,1,1")), PreconditionError);
}

TEST(Valuation, Examples) {
  EXPECT_EQ(monomial_valuation(parse_point("1,1"), M("x^2, y^3")), 2);
  EXPECT_EQ(monomial_valuation(parse_point("3,2"), M("x^2, y^3")), 6);
  EXPECT_EQ(monomial_valuation(parse_point("1/2,1"), M("x^2*y, x*y^3")), 2);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity_monomial(M("x^2, y^3")), 6);
  EXPECT_EQ(multiplicity_monomial(M("x, y")), 1);
  EXPECT_EQ(multiplicity_monomial(M("x^2, x*y, y^2")), 4);
  EXPECT_EQ(multiplicity_monomial(M("x^2, y^2, z^3")), 12);
  for (std::uint64_t r = 1; r <= 4; ++r)
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<ExponentVector> gens;
      for (std::size_t i = 0; i < n; ++i) {
        ExponentVector u(n);
        u.set(i, 1);
        gens.push_back(u);
      }
      MonomialIdeal m(n, gens);
      Integer expected = ipow(Integer(static_cast<unsigned long>(r)), static_cast<unsigned long>(n));
      EXPECT_EQ(multiplicity_monomial(power(m, r)), expected) << "r=" << r << " n=" << n;
    }
  EXPECT_THROW(multiplicity_monomial(M("x*y")), PreconditionError);
}

TEST(Multiplicity, PlanarShoelaceOracle) {
  auto outcome = check_property<MonoSpec>(
      "covolume against shoelace", monomial_ideals(2, 4, 9, true, 2),
      [](const MonoSpec& s) {
        auto a = to_ideal(s);
        return multiplicity_monomial(a) == planar_multiplicity(a);
      },
      300);
  EXPECT_TRUE(outcome) << outcome.message;
}

TEST(Multiplicity, AmGm) {
  auto outcome = check_property<MonoSpec>(
      "e(a) lct(a)^n >= n^n", monomial_ideals(4, 3, 6, true),
      [](const MonoSpec& s) { return check_amgm(to_ideal(s)); }, 200);
  EXPECT_TRUE(outcome) << outcome.message;
  // Equality on (x^a, y^a, z^a): e = a^3, lct = 3/a.
  auto eq = M("x^4, y^4, z^4");
  Rational c = lct(eq);
  EXPECT_EQ(Rational(multiplicity_monomial(eq)) * c * c * c, 27);
}
