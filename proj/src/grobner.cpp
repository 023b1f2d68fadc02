#include "thresholds/grobner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_set>

#include "thresholds/errors.hpp"

namespace thresholds {

namespace {

using Greater = bool (*)(const ExponentVector&, const ExponentVector&);

Greater comparator(MonomialOrder order) {
  return order == MonomialOrder::Grevlex ? &grevlex_greater : &lex_greater;
}

struct WTerm {
  ExponentVector m;
  std::uint64_t c;
};
using WPoly = std::vector<WTerm>;  // decreasing in the working order

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

class Engine {
 public:
  Engine(const Ring& ring, MonomialOrder order, const Budget& budget)
      : ring_(ring), p_(ring.field().characteristic()), greater_(comparator(order)), budget_(budget) {}

  WPoly to_work(const Polynomial& f) const {
    WPoly w;
    w.reserve(f.size());
    for (const auto& t : f.terms()) w.push_back({t.exponents, std::get<Residue>(t.coefficient).value});
    std::sort(w.begin(), w.end(), [&](const WTerm& a, const WTerm& b) { return greater_(a.m, b.m); });
    return w;
  }

  Polynomial to_poly(const WPoly& w) const {
    std::vector<Term> terms;
    terms.reserve(w.size());
    for (const auto& t : w) terms.push_back({t.m, Residue{t.c}});
    return Polynomial::from_terms(ring_, std::move(terms));
  }

  void make_monic(WPoly& f) const {
    if (f.empty() || f[0].c == 1) return;
    std::uint64_t inv = invmod(f[0].c, p_);
    for (auto& t : f) t.c = mulmod(t.c, inv, p_);
  }

  static WPoly shifted(const WPoly& f, const ExponentVector& shift) {
    WPoly out;
    out.reserve(f.size());
    for (const auto& t : f) out.push_back({t.m + shift, t.c});
    return out;
  }

  // f[from..] - c * x^shift * g, merged.
  WPoly sub_mul(const WPoly& f, std::size_t from, std::uint64_t c, const ExponentVector& shift,
                const WPoly& g) const {
    WPoly out;
    out.reserve(f.size() - from + g.size());
    std::size_t i = from, j = 0;
    const std::uint64_t negc = c == 0 ? 0 : p_ - c;
    while (i < f.size() && j < g.size()) {
      ExponentVector gm = g[j].m + shift;
      if (f[i].m == gm) {
        std::uint64_t v = (f[i].c + mulmod(negc, g[j].c, p_)) % p_;
        if (v) out.push_back({f[i].m, v});
        ++i;
        ++j;
      } else if (greater_(f[i].m, gm)) {
        out.push_back(f[i++]);
      } else {
        std::uint64_t v = mulmod(negc, g[j].c, p_);
        if (v) out.push_back({std::move(gm), v});
        ++j;
      }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) {
      std::uint64_t v = mulmod(negc, g[j].c, p_);
      if (v) out.push_back({g[j].m + shift, v});
    }
    return out;
  }

  // Full reduction of f modulo the monic polynomials in basis (skipping index skip).
  WPoly reduce(WPoly f, const std::vector<WPoly>& basis, std::optional<std::size_t> skip = {}) const {
    WPoly rem;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const WTerm& lt = f[pos];
      const WPoly* divisor = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (skip && *skip == k) continue;
        if (!basis[k].empty() && basis[k][0].m.divides(lt.m)) {
          divisor = &basis[k];
          break;
        }
      }
      if (!divisor) {
        rem.push_back(lt);
        ++pos;
        continue;
      }
      f = sub_mul(f, pos, lt.c, lt.m - (*divisor)[0].m, *divisor);
      pos = 0;
    }
    return rem;
  }

  std::vector<WPoly> buchberger(std::vector<WPoly> input) {
    // Inputs are added smallest leading monomial first; one that reduces to
    // zero modulo those already kept lies in their ideal and is dropped.
    std::sort(input.begin(), input.end(), [&](const WPoly& a, const WPoly& b) {
      if (a.empty() || b.empty()) return !a.empty() < !b.empty();
      return greater_(b[0].m, a[0].m);
    });
    std::vector<WPoly> G;
    for (auto& f : input) {
      if (f.empty()) continue;
      WPoly h = reduce(std::move(f), G);
      if (h.empty()) continue;
      make_monic(h);
      if (h[0].m.is_zero()) return {WPoly{{ExponentVector(ring_.nvars()), 1}}};
      G.push_back(std::move(h));
    }
    struct Pair {
      ExponentVector lcm;
      std::size_t i, j;
    };
    // Normal strategy: smallest lcm first, ties broken by index.
    auto later = [this](const Pair& a, const Pair& b) {
      if (!(a.lcm == b.lcm)) return greater_(b.lcm, a.lcm);
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::set<Pair, decltype(later)> queue(later);
    std::unordered_set<std::uint64_t> pending;
    auto key = [](std::size_t i, std::size_t j) {
      if (i > j) std::swap(i, j);
      return (static_cast<std::uint64_t>(j) << 32) | i;
    };
    auto add_pairs = [&](std::size_t j) {
      for (std::size_t i = 0; i < j; ++i) {
        queue.insert({lcm(G[i][0].m, G[j][0].m), i, j});
        pending.insert(key(i, j));
      }
    };
    for (std::size_t j = 0; j < G.size(); ++j) add_pairs(j);

    std::size_t reductions = 0;
    while (!queue.empty()) {
      Pair pr = *queue.begin();
      queue.erase(queue.begin());
      pending.erase(key(pr.i, pr.j));

      const auto& li = G[pr.i][0].m;
      const auto& lj = G[pr.j][0].m;
      // Product criterion: coprime leading monomials.
      if (pr.lcm.degree() == li.degree() + lj.degree()) continue;
      // Chain criterion.
      bool chain = false;
      for (std::size_t k = 0; k < G.size() && !chain; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (G[k][0].m.divides(pr.lcm) && !pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
      }
      if (chain) continue;

      if (++reductions > budget_.max_reductions)
        throw BudgetExceeded("Groebner basis exceeded " + std::to_string(budget_.max_reductions) +
                             " S-polynomial reductions");
      WPoly s = shifted(G[pr.i], pr.lcm - li);
      s = sub_mul(s, 0, 1, pr.lcm - lj, G[pr.j]);
      WPoly h = reduce(std::move(s), G);
      if (h.empty()) continue;
      make_monic(h);
      if (h[0].m.is_zero()) return {WPoly{{ExponentVector(ring_.nvars()), 1}}};
      G.push_back(std::move(h));
      add_pairs(G.size() - 1);
    }

    // Minimal basis, then interreduce.
    std::vector<WPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
        if (i == j) continue;
        if (G[j][0].m.divides(G[i][0].m) && (!(G[j][0].m == G[i][0].m) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(G[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      WPoly head{minimal[i][0]};
      WPoly tail(minimal[i].begin() + 1, minimal[i].end());
      WPoly reduced_tail = reduce(std::move(tail), minimal, i);
      head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
      minimal[i] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const WPoly& a, const WPoly& b) { return greater_(a[0].m, b[0].m); });
    return minimal;
  }

 private:
  const Ring& ring_;
  std::uint64_t p_;
  Greater greater_;
  const Budget& budget_;
};

void require_prime_field(const Ring& ring) {
  if (!ring.field().is_prime_field())
    throw PreconditionError("Groebner bases are only computed over F_p");
}

std::vector<Polynomial> monomial_basis(const PolyIdeal& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.terms()[0].exponents);
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) { return grevlex_greater(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) out.push_back(Polynomial::monomial(ring, gens[i], ring.field().one()));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PolyIdeal::PolyIdeal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

PolyIdeal PolyIdeal::unit(const Ring& ring) {
  PolyIdeal I(ring, {Polynomial::constant(ring, ring.field().one())});
  I.basis_ = std::make_shared<const std::vector<Polynomial>>(I.gens_);
  return I;
}

PolyIdeal PolyIdeal::zero(const Ring& ring) {
  PolyIdeal I(ring, {});
  I.basis_ = std::make_shared<const std::vector<Polynomial>>();
  return I;
}

bool PolyIdeal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool PolyIdeal::inside_maximal_ideal() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Polynomial& g) { return ring_.field().is_zero(g.constant_term()); });
}

Exponent PolyIdeal::max_generator_degree() const {
  Exponent d = 0;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

std::vector<Polynomial> PolyIdeal::basis(const Budget& budget) const {
  if (basis_) return *basis_;
  return groebner_basis(*this, MonomialOrder::Grevlex, budget);
}

PolyIdeal PolyIdeal::standardized(const Budget& budget) const {
  if (basis_) return *this;
  auto b = std::make_shared<const std::vector<Polynomial>>(groebner_basis(*this, MonomialOrder::Grevlex, budget));
  PolyIdeal out(ring_, *b);
  out.basis_ = std::move(b);
  return out;
}

std::string PolyIdeal::str() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += render(gens_[i]);
  }
  return s + ")";
}

PolyIdeal parse_ideal(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> gens;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto piece = text.substr(start, i - start);
      try {
        gens.push_back(parse_polynomial(piece, ring));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in generator '") + std::string(piece) + "': " + e.what(), start + e.position());
      }
      start = i + 1;
    }
  }
  return PolyIdeal(ring, std::move(gens));
}

const ExponentVector& leading_exponent(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw PreconditionError("zero polynomial has no leading term");
  if (order == MonomialOrder::Grevlex) return f.terms()[0].exponents;
  const ExponentVector* best = &f.terms()[0].exponents;
  for (const auto& t : f.terms())
    if (lex_greater(t.exponents, *best)) best = &t.exponents;
  return *best;
}

std::vector<Polynomial> groebner_basis(const PolyIdeal& ideal, MonomialOrder order, const Budget& budget) {
  const Ring& ring = ideal.ring();
  require_prime_field(ring);
  if (ideal.is_zero()) return {};
  if (ideal.is_monomial()) {
    auto b = monomial_basis(ideal);
    if (order == MonomialOrder::Lex)
      std::sort(b.begin(), b.end(), [](const Polynomial& a, const Polynomial& c) {
        return lex_greater(a.terms()[0].exponents, c.terms()[0].exponents);
      });
    return b;
  }
  Engine engine(ring, order, budget);
  std::vector<WPoly> input;
  for (const auto& g : ideal.generators()) input.push_back(engine.to_work(g));
  auto basis = engine.buchberger(std::move(input));
  std::vector<Polynomial> out;
  for (const auto& w : basis) out.push_back(engine.to_poly(w));
  return out;
}

Polynomial normal_form(const Polynomial& g, const std::vector<Polynomial>& basis, MonomialOrder order) {
  require_prime_field(g.ring());
  Budget budget;
  Engine engine(g.ring(), order, budget);
  std::vector<WPoly> b;
  for (const auto& f : basis) {
    require_same_ring(g.ring(), f.ring());
    WPoly w = engine.to_work(f);
    engine.make_monic(w);
    b.push_back(std::move(w));
  }
  return engine.to_poly(engine.reduce(engine.to_work(g), b));
}

bool member(const Polynomial& g, const PolyIdeal& ideal, const Budget& budget) {
  require_same_ring(g.ring(), ideal.ring());
  if (g.is_zero()) return true;
  if (ideal.is_monomial() && g.is_monomial() && !ideal.is_zero()) {
    for (const auto& h : ideal.generators())
      if (h.terms()[0].exponents.divides(g.terms()[0].exponents)) return true;
    return false;
  }
  return normal_form(g, ideal.basis(budget)).is_zero();
}

bool contains(const PolyIdeal& outer, const PolyIdeal& inner, const Budget& budget) {
  require_same_ring(outer.ring(), inner.ring());
  if (inner.is_zero()) return true;
  if (outer.is_zero()) return false;
  if (outer.is_monomial() && inner.is_monomial()) {
    for (const auto& g : inner.generators())
      if (!member(g, outer, budget)) return false;
    return true;
  }
  auto basis = outer.basis(budget);
  for (const auto& g : inner.generators())
    if (!normal_form(g, basis).is_zero()) return false;
  return true;
}

bool equal(const PolyIdeal& a, const PolyIdeal& b, const Budget& budget) {
  require_same_ring(a.ring(), b.ring());
  return a.basis(budget) == b.basis(budget);
}

PolyIdeal operator+(const PolyIdeal& a, const PolyIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PolyIdeal(a.ring(), std::move(gens));
}

PolyIdeal multiply(const PolyIdeal& a, const PolyIdeal& b, const Budget& budget) {
  require_same_ring(a.ring(), b.ring());
  if (a.generators().size() * b.generators().size() > budget.max_products)
    throw BudgetExceeded("ideal product needs too many generator products");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(thresholds::multiply(f, g, budget));
  return PolyIdeal(a.ring(), std::move(gens));
}

PolyIdeal multiply(const Polynomial& f, const PolyIdeal& a, const Budget& budget) {
  require_same_ring(f.ring(), a.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(thresholds::multiply(f, g, budget));
  return PolyIdeal(a.ring(), std::move(gens));
}

PolyIdeal frobenius_power(const PolyIdeal& ideal, std::uint64_t q, const Budget& budget) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(pow(g, q, budget));
  return PolyIdeal(ideal.ring(), std::move(gens));
}

PolyIdeal power(const PolyIdeal& ideal, std::uint64_t k, const Budget& budget) {
  PolyIdeal result = PolyIdeal::unit(ideal.ring());
  PolyIdeal base = ideal.standardized(budget);
  while (k) {
    if (k & 1) result = multiply(result, base, budget).standardized(budget);
    k >>= 1;
    if (k) base = multiply(base, base, budget).standardized(budget);
  }
  return result;
}

PolyIdeal from_monomial_ideal(const MonomialIdeal& a, const Ring& ring) {
  if (a.nvars() != ring.nvars()) throw RingMismatch("monomial ideal and ring have different variable counts");
  std::vector<Polynomial> gens;
  for (const auto& u : a.generators()) gens.push_back(Polynomial::monomial(ring, u, ring.field().one()));
  return PolyIdeal(ring, std::move(gens));
}

std::optional<MonomialIdeal> as_monomial_ideal(const PolyIdeal& a) {
  if (a.is_zero() || !a.is_monomial()) return std::nullopt;
  std::vector<ExponentVector> gens;
  for (const auto& g : a.generators()) gens.push_back(g.terms().front().exponents);
  return MonomialIdeal(a.ring().nvars(), std::move(gens));
}

}  // namespace thresholds
