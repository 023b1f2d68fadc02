#include "thresholds/newton.hpp"

#include <algorithm>
#include <set>

#include "linalg.hpp"
#include "thresholds/errors.hpp"
#include "thresholds/lp.hpp"

namespace thresholds {

namespace {

// Vertices of the Newton polygon of a planar monomial ideal: the lower convex
// hull of the generators, which alone determine every linear minimum over P(a).
std::vector<ExponentVector> planar_vertices(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& u, const ExponentVector& v) { return u[0] < v[0]; });
  auto z = [](Exponent x) { return Integer(static_cast<unsigned long>(x)); };
  std::vector<ExponentVector> hull;
  for (const auto& b : gens) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      Integer cross = (z(a[0]) - z(o[0])) * (z(b[1]) - z(o[1])) - (z(a[1]) - z(o[1])) * (z(b[0]) - z(o[0]));
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(b);
  }
  return hull;
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& h) { return h.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> generators) : nvars_(nvars) {
  if (nvars == 0) throw PreconditionError("monomial ideal needs at least one variable");
  if (generators.empty()) throw PreconditionError("the zero ideal is not a monomial ideal here");
  for (const auto& g : generators)
    if (g.size() != nvars) throw PreconditionError("generator length does not match variable count");
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_proper() const {
  return !(gens_.size() == 1 && gens_[0].is_zero());
}

bool MonomialIdeal::is_m_primary() const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    bool found = std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) {
      return g[i] > 0 && g[i] == g.degree();
    });
    if (!found) return false;
  }
  return true;
}

Exponent MonomialIdeal::order() const {
  Exponent best = gens_.front().degree();
  for (const auto& g : gens_) best = std::min(best, g.degree());
  return best;
}

bool MonomialIdeal::contains(const ExponentVector& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(u); });
}

MonomialIdeal MonomialIdeal::scaled(Exponent r) const {
  if (r == 0) throw PreconditionError("scale factor must be positive");
  std::vector<ExponentVector> g;
  for (const auto& u : gens_) g.push_back(u.scaled(r));
  return MonomialIdeal(nvars_, std::move(g));
}

std::string MonomialIdeal::str(VariableNames names) const {
  Ring ring(nvars_, Field::integers(), names);
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += render(Polynomial::monomial(ring, g, ring.field().one()));
  }
  return out;
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw RingMismatch("monomial ideals in different rings");
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const ExponentVector& g) { return b.contains(g); });
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw RingMismatch("monomial ideals in different rings");
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw RingMismatch("monomial ideals in different rings");
  std::vector<ExponentVector> g;
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) g.push_back(u + v);
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& a, std::uint64_t k) {
  MonomialIdeal result(a.nvars(), {ExponentVector(a.nvars())});
  MonomialIdeal base = a;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

MonomialIdeal disjoint_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  const std::size_t n = a.nvars() + b.nvars();
  std::vector<ExponentVector> g;
  for (const auto& u : a.generators()) {
    ExponentVector w(n);
    for (std::size_t i = 0; i < a.nvars(); ++i) w.set(i, u[i]);
    g.push_back(w);
  }
  for (const auto& v : b.generators()) {
    ExponentVector w(n);
    for (std::size_t i = 0; i < b.nvars(); ++i) w.set(a.nvars() + i, v[i]);
    g.push_back(w);
  }
  return MonomialIdeal(n, std::move(g));
}

MonomialIdeal parse_monomial_ideal(std::string_view text, std::size_t min_vars) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    pieces.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Ring ring = infer_ring(pieces, Field::rationals(), min_vars);
  std::vector<ExponentVector> gens;
  for (auto piece : pieces) {
    Polynomial f = parse_polynomial(piece, ring);
    if (!f.is_monomial())
      throw PreconditionError("'" + std::string(piece) + "' is not a monomial");
    gens.push_back(f.terms()[0].exponents);
  }
  return MonomialIdeal(ring.nvars(), std::move(gens));
}

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (c < 0) throw PreconditionError("point coordinates must be nonnegative");
}

RationalPoint RationalPoint::diagonal(std::size_t n, const Rational& t) {
  return RationalPoint(std::vector<Rational>(n, t));
}

RationalPoint parse_point(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    coords.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RationalPoint(std::move(coords));
}

bool contains_point(const NewtonPolyhedron& polyhedron, const RationalPoint& q) {
  const std::size_t n = polyhedron.nvars();
  if (q.size() != n) throw PreconditionError("point dimension does not match polyhedron");
  const auto& gens = polyhedron.generators();
  lp::Program prog;
  prog.nvars = gens.size();
  prog.objective.assign(gens.size(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    lp::Constraint c{std::vector<Rational>(gens.size()), lp::Relation::LessEqual, q[j]};
    for (std::size_t i = 0; i < gens.size(); ++i) c.coeffs[i] = Rational(Integer(static_cast<unsigned long>(gens[i][j])));
    prog.constraints.push_back(std::move(c));
  }
  prog.constraints.push_back({std::vector<Rational>(gens.size(), Rational(1)), lp::Relation::Equal, Rational(1)});
  return lp::solve(prog).status == lp::Status::Optimal;
}

Rational diagonal_hit(const MonomialIdeal& a) {
  const std::size_t n = a.nvars();
  const auto gens = n == 2 ? planar_vertices(a.generators()) : a.generators();
  const std::size_t k = gens.size();
  // Variables: mu_1..mu_k, t.
  lp::Program prog;
  prog.nvars = k + 1;
  prog.objective.assign(k + 1, Rational(0));
  prog.objective[k] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    lp::Constraint c{std::vector<Rational>(k + 1), lp::Relation::LessEqual, Rational(0)};
    for (std::size_t i = 0; i < k; ++i) c.coeffs[i] = Rational(Integer(static_cast<unsigned long>(gens[i][j])));
    c.coeffs[k] = -1;
    prog.constraints.push_back(std::move(c));
  }
  std::vector<Rational> convex(k + 1, Rational(1));
  convex[k] = 0;
  prog.constraints.push_back({std::move(convex), lp::Relation::Equal, Rational(1)});
  auto sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) throw std::logic_error("diagonal LP is always feasible and bounded");
  return sol.value;
}

ExtendedRational lct_monomial(const MonomialIdeal& a) {
  if (!a.is_proper()) return ExtendedRational::infinity();
  return ExtendedRational(1 / diagonal_hit(a));
}

Rational monomial_valuation(const RationalPoint& v, const MonomialIdeal& a) {
  if (v.size() != a.nvars()) throw PreconditionError("weight dimension does not match ideal");
  std::optional<Rational> best;
  for (const auto& u : a.generators()) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * Integer(static_cast<unsigned long>(u[i]));
    if (!best || s < *best) best = s;
  }
  return *best;
}

Integer multiplicity_monomial(const MonomialIdeal& a) {
  if (!a.is_m_primary() || !a.is_proper())
    throw PreconditionError("multiplicity needs an m-primary monomial ideal");
  const std::size_t n = a.nvars();
  const auto& gens = a.generators();
  auto to_point = [&](const ExponentVector& u) {
    std::vector<Rational> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Integer(static_cast<unsigned long>(u[i]));
    return p;
  };
  // The orthant region below P(a) is the union of the cones from the origin
  // over the bounded facets (those with a strictly positive inner normal).
  std::set<std::vector<Rational>> seen;
  Rational covolume = 0;
  detail::for_each_subset(gens.size(), n, [&](const std::vector<std::size_t>& idx) {
    detail::Matrix sys;
    for (auto i : idx) {
      auto row = to_point(gens[i]);
      row.push_back(-1);
      sys.push_back(std::move(row));
    }
    auto ns = detail::nullspace(sys, n + 1);
    if (ns.size() != 1) return;
    auto h = ns[0];
    if (h[n] == 0) return;
    Rational c = h[n];
    for (auto& v : h) v /= c;  // now <w,u> = 1 on the hyperplane
    for (std::size_t i = 0; i < n; ++i)
      if (h[i] <= 0) return;
    if (seen.count(h)) return;
    std::vector<std::vector<Rational>> cone{std::vector<Rational>(n, Rational(0))};
    for (const auto& g : gens) {
      Rational val = 0;
      auto p = to_point(g);
      for (std::size_t i = 0; i < n; ++i) val += h[i] * p[i];
      if (val < 1) return;
      if (val == 1) cone.push_back(std::move(p));
    }
    seen.insert(h);
    covolume += detail::convex_hull_volume(std::move(cone), n);
  });
  Integer fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
  Rational e = covolume * fact;
  if (e.get_den() != 1) throw std::logic_error("multiplicity is not an integer");
  return e.get_num();
}

bool check_amgm(const MonomialIdeal& a) {
  const std::size_t n = a.nvars();
  Rational lct = lct_monomial(a).value();
  Rational lhs = Rational(multiplicity_monomial(a));
  Rational rhs = 1;
  for (std::size_t i = 0; i < n; ++i) {
    lhs *= lct;
    rhs *= static_cast<long>(n);
  }
  return lhs >= rhs;
}

}  // namespace thresholds
