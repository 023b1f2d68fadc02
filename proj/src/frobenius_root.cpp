#include "thresholds/frobenius_root.hpp"

#include <map>

#include "thresholds/errors.hpp"

namespace thresholds {

namespace {

void require_prime_field(const Ring& ring) {
  if (!ring.field().is_prime_field()) throw PreconditionError("Frobenius roots need coefficients in F_p");
}

void append_components(const Polynomial& h, std::vector<Polynomial>& out, const Budget& budget) {
  for (auto& [w, u] : frobenius_decompose(h, 1, budget)) out.push_back(u);
}

}  // namespace

PolyIdeal frobenius_root(const PolyIdeal& b, unsigned e, const Budget& budget) {
  require_prime_field(b.ring());
  if (e == 0) throw PreconditionError("Frobenius exponent e must be positive");
  std::vector<Polynomial> comps;
  for (const auto& h : b.generators())
    for (auto& [w, u] : frobenius_decompose(h, e, budget)) comps.push_back(u);
  return PolyIdeal(b.ring(), std::move(comps)).standardized(budget);
}

std::map<std::uint64_t, PolyIdeal> frobenius_root_of_power_terms(const PolyIdeal& a, std::uint64_t k, unsigned e,
                                                                 const Budget& budget) {
  const Ring& ring = a.ring();
  require_prime_field(ring);
  if (e == 0) throw PreconditionError("Frobenius exponent e must be positive");
  std::map<std::uint64_t, PolyIdeal> state;
  if (k == 0) {
    state.emplace(0, PolyIdeal::unit(ring));
    return state;
  }
  if (a.is_zero()) return state;
  frobenius_modulus(ring.field().characteristic(), e, budget);

  const std::uint64_t p = ring.field().characteristic();
  const auto& gens = a.generators();
  const std::size_t m = gens.size();

  std::map<std::vector<std::uint64_t>, Polynomial> products;
  auto product = [&](const std::vector<std::uint64_t>& r) -> const Polynomial& {
    auto it = products.find(r);
    if (it != products.end()) return it->second;
    Polynomial g = Polynomial::constant(ring, ring.field().one());
    for (std::size_t j = 0; j < m; ++j)
      if (r[j]) g = multiply(g, pow(gens[j], r[j], budget), budget);
    return products.emplace(r, std::move(g)).first->second;
  };

  state.emplace(k, PolyIdeal::unit(ring));
  for (unsigned step = 0; step < e; ++step) {
    std::map<std::uint64_t, std::vector<Polynomial>> next;
    for (const auto& [Q, K] : state) {
      // Enumerate r_1..r_{m-1} freely; r_m is forced by |r| = Q mod p.
      std::vector<std::uint64_t> r(m, 0);
      std::size_t combos = 0;
      while (true) {
        std::uint64_t partial = 0;
        for (std::size_t j = 0; j + 1 < m; ++j) partial += r[j];
        std::uint64_t last = ((Q % p) + p - (partial % p)) % p;
        std::uint64_t total = partial + last;
        if (total <= Q) {
          if (++combos > budget.max_products)
            throw BudgetExceeded("Frobenius root enumeration exceeded " + std::to_string(budget.max_products) +
                                 " digit vectors");
          r[m - 1] = last;
          const Polynomial& g = product(r);
          auto& bucket = next[(Q - total) / p];
          for (const auto& kgen : K.generators()) append_components(multiply(g, kgen, budget), bucket, budget);
        }
        std::size_t j = 0;
        while (j + 1 < m && ++r[j] == p) r[j++] = 0;
        if (j + 1 >= m) break;
      }
    }
    state.clear();
    for (auto& [Q, comps] : next) {
      PolyIdeal K = PolyIdeal(ring, std::move(comps)).standardized(budget);
      if (!K.is_zero()) state.emplace(Q, std::move(K));
    }
    // a^{Q2} K2 ⊆ a^{Q1} K1 whenever Q1 <= Q2 and K2 ⊆ K1.
    for (auto it = state.begin(); it != state.end();) {
      bool dominated = false;
      for (auto jt = state.begin(); jt != it && !dominated; ++jt)
        if (contains(jt->second, it->second, budget)) dominated = true;
      it = dominated ? state.erase(it) : std::next(it);
    }
  }
  return state;
}

PolyIdeal frobenius_root_of_power(const PolyIdeal& a, std::uint64_t k, unsigned e, const Budget& budget) {
  auto state = frobenius_root_of_power_terms(a, k, e, budget);
  std::vector<Polynomial> gens_out;
  for (const auto& [Q, K] : state) {
    PolyIdeal term = Q == 0 ? K : multiply(power(a, Q, budget), K, budget);
    gens_out.insert(gens_out.end(), term.generators().begin(), term.generators().end());
  }
  return PolyIdeal(a.ring(), std::move(gens_out)).standardized(budget);
}

}  // namespace thresholds
